#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dualnav/geometry.hpp"
#include "dualnav/vtime.hpp"

namespace dualnav {

// Single-floor corridor world. Free space is the union of axis-aligned
// corridor rectangles; walls are the boundary of that union. Doors and
// signs are features on walls; obstacles are circles, optionally scripted
// to move (pedestrians).

struct Corridor {
  Vec2 a;          // centerline start
  Vec2 b;          // centerline end (axis-aligned with a)
  double width = 2.0;

  bool horizontal() const { return a.y == b.y; }
  double length() const { return (b - a).norm(); }
  // Axis-aligned free-space rectangle [lo, hi].
  Vec2 lo() const;
  Vec2 hi() const;
};

struct Door {
  Vec2 pos;            // center of the door leaf, on a wall
  double width = 0.9;
  double height = 2.1;
  double facing = 0.0;  // wall normal pointing into the corridor, degrees
  int room_id = -1;
};

struct Sign {
  std::string text;
  Vec2 pos;             // on a wall
  double facing = 0.0;  // outward normal, degrees; readable within +/-60 deg
  double z0 = 1.2;      // vertical extent of the plate
  double z1 = 1.7;
  double half_width = 0.25;
};

struct Room {
  int id = 0;
  std::string label;   // text on the door plate, e.g. "306"
  int door_index = -1;
  Pose doorway;        // in-corridor pose facing the door
};

struct Obstacle {
  Vec2 pos;
  double radius = 0.3;
  double height = 1.0;
  bool person = false;
  // Scripted motion: active in [t0, t1], drifting at vel m/s from pos.
  bool dynamic = false;
  double t0_s = 0.0;
  double t1_s = 0.0;
  Vec2 vel{0.0, 0.0};

  bool active_at(VirtualTime t) const {
    if (!dynamic) return true;
    const double s = static_cast<double>(t.millis) / 1000.0;
    return s >= t0_s && s <= t1_s;
  }
  Vec2 pos_at(VirtualTime t) const {
    if (!dynamic) return pos;
    const double s = static_cast<double>(t.millis) / 1000.0;
    return pos + vel * (s - t0_s);
  }
};

// What a 2D ray leaving free space ran into.
struct RayHit {
  double distance = 0.0;
  Vec2 point;
  bool hit = false;  // false when free space extends past max_range
};

struct WorldModel {
  std::string preset = "custom";
  std::uint64_t seed = 0;

  std::vector<Corridor> corridors;
  std::vector<Door> doors;
  std::vector<Sign> signs;
  std::vector<Room> rooms;
  std::vector<Obstacle> obstacles;

  // Junction graph over corridor centerlines (nodes at endpoints and
  // crossings); edges reference the corridor they run along.
  std::vector<Vec2> nodes;
  std::vector<std::pair<int, int>> edges;

  Pose start;
  std::vector<int> destination_room_ids;

  bool inside(Vec2 p) const;
  // First boundary crossing of p + t*dir, t > 0. p must be inside.
  RayHit raycast_wall(Vec2 p, Vec2 dir, double max_range = 60.0) const;
  // Nearest active obstacle along the ray, if any.
  std::optional<RayHit> raycast_obstacle(Vec2 p, Vec2 dir, VirtualTime t,
                                         double max_range, int* index = nullptr) const;

  std::optional<int> door_at(Vec2 wall_point) const;
  std::optional<int> sign_at(Vec2 wall_point) const;
  const Room* room_by_label(const std::string& label) const;
  const Room* room_by_id(int id) const;

  bool has_active_dynamic_obstacle(VirtualTime t) const;
  void check() const;  // structural invariants (connectivity, unique signs)
};

// Distance to nearest blocking surface along the pose heading, capped at
// 4 m (sensor limit).
double ultrasonic_range(const Pose& pose, const WorldModel& world,
                        VirtualTime t = VirtualTime{0});

}  // namespace dualnav
