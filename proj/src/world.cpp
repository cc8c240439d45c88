#include "dualnav/world.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "dualnav/errors.hpp"

namespace dualnav {

namespace {
constexpr double kEps = 1e-9;
}

Vec2 Corridor::lo() const {
  const double h = width / 2.0;
  return {std::min(a.x, b.x) - (horizontal() ? 0.0 : h),
          std::min(a.y, b.y) - (horizontal() ? h : 0.0)};
}

Vec2 Corridor::hi() const {
  const double h = width / 2.0;
  return {std::max(a.x, b.x) + (horizontal() ? 0.0 : h),
          std::max(a.y, b.y) + (horizontal() ? h : 0.0)};
}

bool WorldModel::inside(Vec2 p) const {
  for (const auto& c : corridors) {
    const Vec2 lo = c.lo(), hi = c.hi();
    if (p.x >= lo.x - kEps && p.x <= hi.x + kEps && p.y >= lo.y - kEps && p.y <= hi.y + kEps) {
      return true;
    }
  }
  return false;
}

RayHit WorldModel::raycast_wall(Vec2 p, Vec2 dir, double max_range) const {
  // Interval coverage along the ray; the exit point is the first gap.
  struct Interval {
    double lo, hi;
  };
  std::vector<Interval> spans;
  spans.reserve(corridors.size());
  for (const auto& c : corridors) {
    const Vec2 lo = c.lo(), hi = c.hi();
    double t0 = 0.0, t1 = max_range;
    bool ok = true;
    const double po[2] = {p.x, p.y};
    const double dv[2] = {dir.x, dir.y};
    const double lov[2] = {lo.x, lo.y};
    const double hiv[2] = {hi.x, hi.y};
    for (int axis = 0; axis < 2 && ok; ++axis) {
      if (std::abs(dv[axis]) < 1e-12) {
        if (po[axis] < lov[axis] - kEps || po[axis] > hiv[axis] + kEps) ok = false;
      } else {
        double ta = (lov[axis] - po[axis]) / dv[axis];
        double tb = (hiv[axis] - po[axis]) / dv[axis];
        if (ta > tb) std::swap(ta, tb);
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
        if (t0 > t1 + kEps) ok = false;
      }
    }
    if (ok && t1 > -kEps) spans.push_back({std::max(0.0, t0), t1});
  }
  std::sort(spans.begin(), spans.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  double reach = 0.0;
  for (const auto& s : spans) {
    if (s.lo > reach + 1e-7) break;
    reach = std::max(reach, s.hi);
  }
  RayHit hit;
  if (reach >= max_range - kEps) {
    hit.hit = false;
    hit.distance = max_range;
    hit.point = p + dir * max_range;
  } else {
    hit.hit = true;
    hit.distance = reach;
    hit.point = p + dir * reach;
  }
  return hit;
}

std::optional<RayHit> WorldModel::raycast_obstacle(Vec2 p, Vec2 dir, VirtualTime t,
                                                   double max_range, int* index) const {
  std::optional<RayHit> best;
  for (std::size_t i = 0; i < obstacles.size(); ++i) {
    const auto& o = obstacles[i];
    if (!o.active_at(t)) continue;
    const Vec2 c = o.pos_at(t);
    const Vec2 rel = c - p;
    const double proj = rel.dot(dir);
    if (proj < 0) continue;
    const double perp2 = rel.dot(rel) - proj * proj;
    const double r2 = o.radius * o.radius;
    if (perp2 > r2) continue;
    const double thc = std::sqrt(r2 - perp2);
    const double dist = proj - thc;
    if (dist < 0 || dist > max_range) continue;
    if (!best || dist < best->distance) {
      best = RayHit{dist, p + dir * dist, true};
      if (index) *index = static_cast<int>(i);
    }
  }
  return best;
}

std::optional<int> WorldModel::door_at(Vec2 wall_point) const {
  for (std::size_t i = 0; i < doors.size(); ++i) {
    const auto& d = doors[i];
    const Vec2 rel = wall_point - d.pos;
    // Span runs along the wall, i.e. perpendicular to the facing normal.
    const Vec2 n = unit_from_deg(d.facing);
    const double off_plane = std::abs(rel.dot(n));
    const double along = std::abs(rel.cross(n));
    if (off_plane < 0.08 && along <= d.width / 2.0) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::optional<int> WorldModel::sign_at(Vec2 wall_point) const {
  for (std::size_t i = 0; i < signs.size(); ++i) {
    const auto& s = signs[i];
    const Vec2 rel = wall_point - s.pos;
    const Vec2 n = unit_from_deg(s.facing);
    const double off_plane = std::abs(rel.dot(n));
    const double along = std::abs(rel.cross(n));
    if (off_plane < 0.08 && along <= s.half_width) return static_cast<int>(i);
  }
  return std::nullopt;
}

const Room* WorldModel::room_by_label(const std::string& label) const {
  for (const auto& r : rooms) {
    if (r.label == label) return &r;
  }
  return nullptr;
}

const Room* WorldModel::room_by_id(int id) const {
  for (const auto& r : rooms) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

bool WorldModel::has_active_dynamic_obstacle(VirtualTime t) const {
  for (const auto& o : obstacles) {
    if (o.dynamic && o.active_at(t)) return true;
  }
  return false;
}

void WorldModel::check() const {
  if (corridors.empty()) throw RangeError("corridors", "world has no corridors");
  if (nodes.empty()) throw RangeError("nodes", "world has no junction graph");
  // Graph connectivity.
  std::vector<std::vector<int>> adj(nodes.size());
  for (const auto& e : edges) {
    adj[static_cast<std::size_t>(e.first)].push_back(e.second);
    adj[static_cast<std::size_t>(e.second)].push_back(e.first);
  }
  std::vector<bool> seen(nodes.size(), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        ++reached;
        q.push(v);
      }
    }
  }
  if (reached != nodes.size()) throw RangeError("edges", "corridor graph is not connected");
  // Rooms reachable = doorway pose inside free space.
  for (const auto& r : rooms) {
    if (!inside(r.doorway.position())) {
      throw RangeError("rooms", "doorway outside free space: " + r.label);
    }
  }
  // Sign texts unique per building.
  std::vector<std::string> texts;
  for (const auto& s : signs) texts.push_back(s.text);
  std::sort(texts.begin(), texts.end());
  if (std::adjacent_find(texts.begin(), texts.end()) != texts.end()) {
    throw RangeError("signs", "duplicate sign text");
  }
}

double ultrasonic_range(const Pose& pose, const WorldModel& world, VirtualTime t) {
  constexpr double kCap = 4.0;
  const Vec2 dir = pose.heading();
  const RayHit wall = world.raycast_wall(pose.position(), dir, kCap + 1.0);
  double best = wall.hit ? wall.distance : kCap;
  if (auto obs = world.raycast_obstacle(pose.position(), dir, t, kCap + 1.0)) {
    best = std::min(best, obs->distance);
  }
  return std::min(best, kCap);
}

}  // namespace dualnav
