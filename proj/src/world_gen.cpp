#include "dualnav/world_gen.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "dualnav/errors.hpp"
#include "dualnav/rng.hpp"

namespace dualnav {

namespace {

struct Knobs {
  double main_len_lo = 16.0;
  double main_len_hi = 22.0;
  int branches = 2;
  double sub_branch_prob = 0.0;
  double room_spacing = 3.0;
  int distractors = 0;
  double sign_z0 = 1.2;
  double sign_z1 = 1.7;
  int num_destinations = 3;
};

Knobs preset_knobs(const std::string& preset, Rng& rng) {
  Knobs k;
  if (preset == "university1") {
    k = {16.0, 22.0, 2, 0.0, 3.0, 0, 1.2, 1.7, 3};
  } else if (preset == "university2") {
    k = {18.0, 24.0, 2, 0.35, 3.5, 0, 1.2, 1.7, 3};
  } else if (preset == "university3") {
    k = {16.0, 20.0, 3, 0.5, 3.0, 0, 1.2, 1.7, 3};
  } else if (preset == "office") {
    k = {14.0, 20.0, 2, 0.4, 2.5, 6, 1.2, 1.7, 2};
  } else if (preset == "residential") {
    k = {12.0, 18.0, 1, 0.0, 4.0, 0, 2.0, 2.4, 1};
  } else if (preset == "random") {
    k.main_len_lo = 12.0 + 6.0 * rng.uniform01();
    k.main_len_hi = k.main_len_lo + 6.0;
    k.branches = static_cast<int>(rng.uniform_int(1, 3));
    k.sub_branch_prob = rng.uniform01() * 0.5;
    k.room_spacing = 2.5 + 2.0 * rng.uniform01();
    k.distractors = static_cast<int>(rng.uniform_int(0, 4));
    k.num_destinations = 2;
  } else {
    throw RangeError("preset", "unknown preset: " + preset);
  }
  return k;
}

double quantize(double v, double step) { return std::round(v / step) * step; }

struct Builder {
  WorldModel w;
  Rng rng;
  Knobs knobs;
  int next_room_number = 301;

  explicit Builder(std::uint64_t seed) : rng(seed) {}

  int node_at(Vec2 p) {
    for (std::size_t i = 0; i < w.nodes.size(); ++i) {
      if ((w.nodes[i] - p).norm() < 1e-6) return static_cast<int>(i);
    }
    w.nodes.push_back(p);
    return static_cast<int>(w.nodes.size()) - 1;
  }

  void edge(Vec2 a, Vec2 b) { w.edges.emplace_back(node_at(a), node_at(b)); }

  // One corridor plus graph edges split at the given junction points.
  void corridor(Vec2 a, Vec2 b, const std::vector<Vec2>& splits = {}) {
    w.corridors.push_back({a, b, 2.0});
    std::vector<Vec2> pts{a};
    for (const auto& s : splits) pts.push_back(s);
    pts.push_back(b);
    const Vec2 axis = b - a;
    std::sort(pts.begin(), pts.end(), [&](Vec2 p, Vec2 q) {
      return (p - a).dot(axis) < (q - a).dot(axis);
    });
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) edge(pts[i], pts[i + 1]);
  }

  // Room with a door on the corridor wall plus its plate sign.
  void room(Vec2 door_pos, double facing_deg, const std::string& label) {
    Door d;
    d.pos = door_pos;
    d.facing = facing_deg;
    d.room_id = static_cast<int>(w.rooms.size());
    w.doors.push_back(d);

    const Vec2 n = unit_from_deg(facing_deg);
    Room r;
    r.id = d.room_id;
    r.label = label;
    r.door_index = static_cast<int>(w.doors.size()) - 1;
    r.doorway.x = door_pos.x + n.x * 0.8;
    r.doorway.y = door_pos.y + n.y * 0.8;
    r.doorway.yaw = wrap360(facing_deg + 180.0);
    w.rooms.push_back(r);

    Sign plate;
    plate.text = label;
    // Plate sits beside the door leaf on the same wall.
    const Vec2 along{-n.y, n.x};
    plate.pos = door_pos + along * 0.6;
    plate.facing = facing_deg;
    plate.z0 = knobs.sign_z0;
    plate.z1 = knobs.sign_z1;
    plate.half_width = 0.18;
    w.signs.push_back(plate);
  }

  // Rooms along a corridor, alternating walls, staying clear of junctions.
  void populate_rooms(const Corridor& c, const std::vector<Vec2>& junctions) {
    const Vec2 axis = c.b - c.a;
    const double len = axis.norm();
    const Vec2 dir = axis * (1.0 / len);
    const Vec2 left{-dir.y, dir.x};
    bool side_left = rng.uniform01() < 0.5;
    for (double s = 2.0; s <= len - 1.2; s += knobs.room_spacing) {
      const Vec2 center = c.a + dir * quantize(s, 0.1);
      bool clear = true;
      for (const auto& j : junctions) {
        if ((center - j).norm() < 2.4) clear = false;
      }
      if (!clear) continue;
      const Vec2 wall_pt = center + left * (side_left ? (c.width / 2.0) : -(c.width / 2.0));
      const double facing = deg_from_vec(side_left ? left * -1.0 : left);
      room(wall_pt, facing, std::to_string(next_room_number++));
      side_left = !side_left;
    }
  }
};

const char* kDistractorTexts[] = {"EXIT",         "NOTICE BOARD", "FIRE HOSE",
                                  "RECYCLING",    "STAFF ONLY",   "ELEVATOR",
                                  "WET FLOOR",    "MAIL ROOM",    "VENDING"};

}  // namespace

int preset_destination_count(const std::string& preset) {
  if (preset == "university1" || preset == "university2" || preset == "university3") return 3;
  if (preset == "office") return 2;
  if (preset == "residential") return 1;
  if (preset == "random") return 2;
  throw RangeError("preset", "unknown preset: " + preset);
}

WorldModel generate_world(const std::string& preset, std::uint64_t seed) {
  Rng knob_rng(hash_combine(seed, fnv1a64(preset)));
  Knobs knobs = preset_knobs(preset, knob_rng);

  Builder b(hash_combine(seed, fnv1a64(preset + "/layout")));
  b.knobs = knobs;
  b.w.preset = preset;
  b.w.seed = seed;

  const double main_len = quantize(b.rng.uniform(knobs.main_len_lo, knobs.main_len_hi), 0.5);
  const Vec2 main_a{0.0, 0.0};
  const Vec2 main_b{main_len, 0.0};

  // Branch roots along the main corridor, separated enough that junction
  // boxes do not merge.
  std::vector<double> roots;
  for (int i = 0; i < knobs.branches; ++i) {
    for (int attempt = 0; attempt < 40; ++attempt) {
      const double x = quantize(b.rng.uniform(5.0, main_len - 3.0), 0.5);
      bool ok = true;
      for (double r : roots) {
        if (std::abs(r - x) < 4.5) ok = false;
      }
      if (ok) {
        roots.push_back(x);
        break;
      }
    }
  }
  std::sort(roots.begin(), roots.end());

  std::vector<Vec2> main_splits;
  for (double r : roots) main_splits.push_back({r, 0.0});
  b.corridor(main_a, main_b, main_splits);

  std::vector<Vec2> all_junctions = main_splits;
  struct Branch {
    Vec2 root;
    Vec2 end;
  };
  std::vector<Branch> branches;
  bool up = b.rng.uniform01() < 0.5;
  for (double r : roots) {
    const double len = quantize(b.rng.uniform(7.0, 14.0), 0.5);
    const Vec2 root{r, 0.0};
    const Vec2 end{r, up ? len : -len};
    // Sub-branch: an L off the branch, making a two-junction route.
    if (b.rng.uniform01() < knobs.sub_branch_prob) {
      const double at = quantize(b.rng.uniform(5.0, len - 1.0), 0.5);
      const Vec2 mid{r, up ? at : -at};
      b.corridor(root, end, {mid});
      const double sub_len = quantize(b.rng.uniform(5.0, 9.0), 0.5);
      const bool to_right = b.rng.uniform01() < 0.5;
      const Vec2 sub_end{r + (to_right ? sub_len : -sub_len), mid.y};
      b.corridor(mid, sub_end);
      all_junctions.push_back(mid);
      branches.push_back({mid, sub_end});
    } else {
      b.corridor(root, end);
    }
    branches.push_back({root, end});
    up = !up;
  }

  for (const auto& c : b.w.corridors) b.populate_rooms(c, all_junctions);

  // Distractor wall texts (visual clutter alongside target signs).
  for (int i = 0; i < knobs.distractors && !b.w.corridors.empty(); ++i) {
    const auto& c = b.w.corridors[static_cast<std::size_t>(
        b.rng.uniform_int(0, static_cast<std::int64_t>(b.w.corridors.size()) - 1))];
    const Vec2 axis = c.b - c.a;
    const double len = axis.norm();
    const Vec2 dir = axis * (1.0 / len);
    const Vec2 left{-dir.y, dir.x};
    const double s = quantize(b.rng.uniform(1.5, len - 1.5), 0.1);
    const bool side_left = b.rng.uniform01() < 0.5;
    Sign sg;
    sg.text = std::string(kDistractorTexts[b.rng.uniform_int(0, 8)]) + " " +
              std::to_string(i + 1);
    sg.pos = c.a + dir * s + left * (side_left ? c.width / 2.0 : -c.width / 2.0);
    sg.facing = deg_from_vec(side_left ? left * -1.0 : left);
    sg.z0 = 1.4;
    sg.z1 = 1.9;
    sg.half_width = 0.3;
    b.w.signs.push_back(sg);
  }

  b.w.start = Pose{0.7, 0.0, 0.0};

  // Destinations: farthest rooms first, path length within [10, 40] m when
  // possible (graph node distance as a proxy, refined by the oracle later).
  std::vector<std::pair<double, int>> by_dist;
  for (const auto& r : b.w.rooms) {
    const double d = std::abs(r.doorway.x - b.w.start.x) + std::abs(r.doorway.y - b.w.start.y);
    by_dist.emplace_back(d, r.id);
  }
  std::sort(by_dist.rbegin(), by_dist.rend());
  for (const auto& [d, id] : by_dist) {
    if (static_cast<int>(b.w.destination_room_ids.size()) >= knobs.num_destinations) break;
    if (d < 8.0) continue;
    b.w.destination_room_ids.push_back(id);
  }
  while (static_cast<int>(b.w.destination_room_ids.size()) < knobs.num_destinations &&
         b.w.destination_room_ids.size() < b.w.rooms.size()) {
    // Small worlds: fall back to the farthest remaining rooms.
    for (const auto& [d, id] : by_dist) {
      if (std::find(b.w.destination_room_ids.begin(), b.w.destination_room_ids.end(), id) ==
          b.w.destination_room_ids.end()) {
        b.w.destination_room_ids.push_back(id);
        break;
      }
    }
  }

  b.w.check();
  return b.w;
}

WorldModel canonical_world(const std::string& name) {
  Builder b(0xc0ffee);
  b.knobs = Knobs{};
  b.w.preset = "canonical/" + name;
  b.w.seed = 0;

  if (name == "straight") {
    b.corridor({0, 0}, {12, 0});
    b.next_room_number = 301;
    // Doors alternating sides every ~2.4 m create the visual churn the
    // gate threshold sweep relies on.
    b.room({2.4, 1.0}, 270.0, "301");
    b.room({4.8, -1.0}, 90.0, "302");
    b.room({7.2, 1.0}, 270.0, "303");
    b.room({9.6, -1.0}, 90.0, "304");
    b.room({10.8, 1.0}, 270.0, "306");
    b.w.start = Pose{0.7, 0.0, 0.0};
    b.w.destination_room_ids = {4};
  } else if (name == "l_junction") {
    b.corridor({0, 0}, {8, 0});
    b.corridor({8, 0}, {8, 8});
    b.room({4.0, 1.0}, 270.0, "301");
    b.room({8 - 1.0, 4.0}, 0.0, "302");
    b.room({8 + 1.0, 6.8}, 180.0, "306");
    b.w.start = Pose{0.7, 0.0, 0.0};
    b.w.destination_room_ids = {2};
  } else if (name == "t_junction") {
    b.corridor({0, 0}, {8, 0});
    b.corridor({8, -7}, {8, 7}, {{8, 0}});
    b.room({4.0, -1.0}, 90.0, "301");
    b.room({8 - 1.0, 5.2}, 0.0, "306");
    b.room({8 + 1.0, -5.2}, 180.0, "309");
    b.w.start = Pose{0.7, 0.0, 0.0};
    b.w.destination_room_ids = {1, 2};
  } else if (name == "two_junction_16p5") {
    // 6.5 m + 5 m + 5 m legs; start to goal doorway measures 16.5 m.
    b.corridor({0, 0}, {7, 0});
    b.corridor({7, 0}, {7, 5});
    b.corridor({7, 5}, {12.5, 5});
    b.room({3.4, 1.0}, 270.0, "301");
    b.room({4.9, -1.0}, 90.0, "302");
    b.room({7 - 1.0, 2.5}, 0.0, "303");
    b.room({9.6, 4.0}, 90.0, "304");
    b.room({12.0, 6.0}, 270.0, "306");
    b.w.start = Pose{0.5, 0.0, 0.0};
    b.w.destination_room_ids = {4};
  } else {
    throw RangeError("name", "unknown canonical world: " + name);
  }

  b.w.check();
  return b.w;
}

void add_crossing_pedestrian(WorldModel& world, double ahead_m, double t0_s, double t1_s) {
  const Vec2 dir = world.start.heading();
  const Vec2 left{-dir.y, dir.x};
  Obstacle person;
  person.pos = world.start.position() + dir * ahead_m + left * -2.5;
  person.radius = 0.25;
  person.height = 1.8;
  person.person = true;
  person.dynamic = true;
  person.t0_s = t0_s;
  person.t1_s = t1_s;
  person.vel = left * 0.4;
  world.obstacles.push_back(person);
}

}  // namespace dualnav
