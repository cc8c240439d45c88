#pragma once

#include <vector>

#include "dualnav/action.hpp"
#include "dualnav/goal.hpp"
#include "dualnav/world.hpp"

namespace dualnav {

// Corridor-graph route as a polyline (start, junction nodes..., target),
// collinear vertices collapsed.
struct Route {
  std::vector<Vec2> points;
  double length = 0.0;
};

// Metric-shortest path through the junction graph between two in-corridor
// positions. Throws UnreachableGoal when either endpoint is off the graph
// or no path exists.
Route route_between(const WorldModel& world, Vec2 from, Vec2 to);

// Ground-truth action at an arbitrary pose, derived from the shortest
// path to the goal doorway:
//   Idle      within 0.5 m of the doorway
//   TurnBack  heading opposes the path (> 135ated deg off)
//   CW/CCW    heading roughly perpendicular to the path, or a turn vertex
//             lies within 1 m ahead
//   Forward   otherwise
Action oracle_label_at(const WorldModel& world, const Pose& pose, const GoalSpec& goal);

struct LabeledWaypoint {
  Pose pose;
  Action action = Action::forward();
};

// Waypoints every `spacing` metres along the shortest path, labeled by the
// rules above. The first waypoint keeps the start pose heading; later ones
// face along the path. The doorway waypoint (Idle) is always included.
std::vector<LabeledWaypoint> gt_labels(const WorldModel& world, const Pose& start,
                                       const GoalSpec& goal, double spacing = 0.5);

// Doorway pose of the goal room. Throws UnreachableGoal when no room
// carries the destination text.
Pose goal_doorway(const WorldModel& world, const GoalSpec& goal);

}  // namespace dualnav
