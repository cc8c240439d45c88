#include "dualnav/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "dualnav/errors.hpp"

namespace dualnav {

namespace {

// Projection of p onto the edge's corridor axis, or nothing when p lies
// outside that corridor's rectangle.
struct OnEdge {
  int edge_index;
  double along;  // distance from edge's first node
};

std::vector<OnEdge> edges_containing(const WorldModel& w, Vec2 p) {
  std::vector<OnEdge> out;
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    const Vec2 a = w.nodes[static_cast<std::size_t>(w.edges[i].first)];
    const Vec2 b = w.nodes[static_cast<std::size_t>(w.edges[i].second)];
    const Vec2 axis = b - a;
    const double len = axis.norm();
    if (len < 1e-9) continue;
    const Vec2 dir = axis * (1.0 / len);
    const double along = (p - a).dot(dir);
    const double lateral = std::abs((p - a).cross(dir));
    // Corridor rectangles are width 2 by construction; accept the corridor
    // half-width plus a small margin.
    if (along >= -1e-6 && along <= len + 1e-6 && lateral <= 1.0 + 1e-6) {
      out.push_back({static_cast<int>(i), std::clamp(along, 0.0, len)});
    }
  }
  return out;
}

std::vector<Vec2> collapse_collinear(std::vector<Vec2> pts) {
  std::vector<Vec2> out;
  for (const auto& p : pts) {
    if (!out.empty() && (p - out.back()).norm() < 1e-9) continue;
    while (out.size() >= 2) {
      const Vec2 d1 = out.back() - out[out.size() - 2];
      const Vec2 d2 = p - out.back();
      if (std::abs(d1.cross(d2)) < 1e-9 && d1.dot(d2) > 0) {
        out.pop_back();
      } else {
        break;
      }
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace

Route route_between(const WorldModel& world, Vec2 from, Vec2 to) {
  const auto from_edges = edges_containing(world, from);
  const auto to_edges = edges_containing(world, to);
  if (from_edges.empty()) throw UnreachableGoal("route: start position off the corridor graph");
  if (to_edges.empty()) throw UnreachableGoal("route: target position off the corridor graph");

  // Same-edge fast path competes with graph routes below.
  const std::size_t n = world.nodes.size();
  const std::size_t kFrom = n, kTo = n + 1;
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(n + 2);
  auto add = [&](std::size_t u, std::size_t v, double wgt) {
    adj[u].push_back({v, wgt});
    adj[v].push_back({u, wgt});
  };
  for (const auto& e : world.edges) {
    const Vec2 a = world.nodes[static_cast<std::size_t>(e.first)];
    const Vec2 b = world.nodes[static_cast<std::size_t>(e.second)];
    add(static_cast<std::size_t>(e.first), static_cast<std::size_t>(e.second), (b - a).norm());
  }
  for (const auto& oe : from_edges) {
    const auto& e = world.edges[static_cast<std::size_t>(oe.edge_index)];
    const double len =
        (world.nodes[static_cast<std::size_t>(e.second)] - world.nodes[static_cast<std::size_t>(e.first)]).norm();
    add(kFrom, static_cast<std::size_t>(e.first), oe.along);
    add(kFrom, static_cast<std::size_t>(e.second), len - oe.along);
  }
  for (const auto& oe : to_edges) {
    const auto& e = world.edges[static_cast<std::size_t>(oe.edge_index)];
    const double len =
        (world.nodes[static_cast<std::size_t>(e.second)] - world.nodes[static_cast<std::size_t>(e.first)]).norm();
    add(kTo, static_cast<std::size_t>(e.first), oe.along);
    add(kTo, static_cast<std::size_t>(e.second), len - oe.along);
  }
  for (const auto& fe : from_edges) {
    for (const auto& te : to_edges) {
      if (fe.edge_index == te.edge_index) {
        add(kFrom, kTo, std::abs(fe.along - te.along));
      }
    }
  }

  std::vector<double> dist(n + 2, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> prev(n + 2, SIZE_MAX);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[kFrom] = 0.0;
  pq.push({0.0, kFrom});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u] + 1e-12) continue;
    if (u == kTo) break;
    for (const auto& [v, wgt] : adj[u]) {
      if (dist[u] + wgt < dist[v] - 1e-12) {
        dist[v] = dist[u] + wgt;
        prev[v] = u;
        pq.push({dist[v], v});
      }
    }
  }
  if (!std::isfinite(dist[kTo])) throw UnreachableGoal("route: no path to target");

  std::vector<Vec2> pts;
  for (std::size_t u = kTo; u != SIZE_MAX; u = prev[u]) {
    if (u == kFrom) {
      pts.push_back(from);
    } else if (u == kTo) {
      pts.push_back(to);
    } else {
      pts.push_back(world.nodes[u]);
    }
    if (u == kFrom) break;
  }
  std::reverse(pts.begin(), pts.end());

  Route r;
  r.points = collapse_collinear(std::move(pts));
  r.length = dist[kTo];
  return r;
}

Pose goal_doorway(const WorldModel& world, const GoalSpec& goal) {
  if (const Room* room = world.room_by_label(goal.destination_text)) return room->doorway;
  for (const auto& r : world.rooms) {
    if (r.label.find(goal.destination_text) != std::string::npos) return r.doorway;
  }
  throw UnreachableGoal("no room labeled: " + goal.destination_text);
}

namespace {

Action label_for(const WorldModel& world, const Pose& pose, const Pose& doorway) {
  if ((pose.position() - doorway.position()).norm() < 0.5) return Action::idle();
  const Route route = route_between(world, pose.position(), doorway.position());
  if (route.points.size() < 2) return Action::idle();

  const Vec2 first_dir_v = route.points[1] - route.points[0];
  const double first_dir = deg_from_vec(first_dir_v);
  const double delta = wrap180(first_dir - pose.yaw);
  if (std::abs(delta) > 135.0) return Action::turn_back();
  if (delta > 45.0) return Action::ccw(90);
  if (delta < -45.0) return Action::cw(90);

  // Roughly aligned: a turn vertex within the 1 m approach window?
  double cum = 0.0;
  for (std::size_t i = 1; i + 1 < route.points.size(); ++i) {
    cum += (route.points[i] - route.points[i - 1]).norm();
    if (cum > 1.0 + 1e-9) break;
    const Vec2 d1 = route.points[i] - route.points[i - 1];
    const Vec2 d2 = route.points[i + 1] - route.points[i];
    const double turn = wrap180(deg_from_vec(d2) - deg_from_vec(d1));
    if (std::abs(turn) > 1.0) {
      const int angle = static_cast<int>(std::lround(std::min(std::abs(turn), 180.0)));
      return turn > 0 ? Action::ccw(angle) : Action::cw(angle);
    }
  }
  return Action::forward();
}

}  // namespace

Action oracle_label_at(const WorldModel& world, const Pose& pose, const GoalSpec& goal) {
  return label_for(world, pose, goal_doorway(world, goal));
}

std::vector<LabeledWaypoint> gt_labels(const WorldModel& world, const Pose& start,
                                       const GoalSpec& goal, double spacing) {
  if (spacing <= 0) throw RangeError("spacing", "must be > 0");
  const Pose doorway = goal_doorway(world, goal);
  const Route route = route_between(world, start.position(), doorway.position());

  std::vector<LabeledWaypoint> out;
  // First waypoint keeps the start heading so an opposed goal labels
  // TurnBack; subsequent waypoints face along the path.
  LabeledWaypoint first;
  first.pose = start;
  first.action = label_for(world, first.pose, doorway);
  out.push_back(first);

  double carried = spacing;
  for (std::size_t i = 1; i < route.points.size(); ++i) {
    const Vec2 a = route.points[i - 1];
    const Vec2 b = route.points[i];
    const double seg_len = (b - a).norm();
    const double yaw = deg_from_vec(b - a);
    double s = carried;
    while (s <= seg_len + 1e-9) {
      const Vec2 p = a + (b - a) * (s / seg_len);
      LabeledWaypoint wp;
      wp.pose = Pose{p.x, p.y, yaw};
      wp.action = label_for(world, wp.pose, doorway);
      out.push_back(wp);
      s += spacing;
    }
    carried = s - seg_len;
  }
  if (out.empty() || out.back().action != Action::idle()) {
    LabeledWaypoint last;
    const Vec2 end = route.points.back();
    const Vec2 prev = route.points.size() >= 2 ? route.points[route.points.size() - 2] : end;
    last.pose = Pose{end.x, end.y, deg_from_vec(end - prev)};
    last.action = Action::idle();
    out.push_back(last);
  }
  return out;
}

}  // namespace dualnav
