#pragma once

#include <cmath>

namespace dualnav {

// Units policy:
// - distances in metres
// - angles in degrees; yaw measured counter-clockwise from +x, in [0, 360)
// - image bearings are clockwise-positive (positive = to the right)

inline constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

// Wrap into [0, 360).
inline double wrap360(double deg) {
  double d = std::fmod(deg, 360.0);
  if (d < 0) d += 360.0;
  return d;
}

// Wrap into (-180, 180].
inline double wrap180(double deg) {
  double d = wrap360(deg);
  if (d > 180.0) d -= 360.0;
  return d;
}

inline double angular_distance(double a, double b) { return std::abs(wrap180(a - b)); }

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm() const { return std::sqrt(x * x + y * y); }
};

inline Vec2 unit_from_deg(double deg) { return {std::cos(deg2rad(deg)), std::sin(deg2rad(deg))}; }
inline double deg_from_vec(Vec2 v) { return wrap360(rad2deg(std::atan2(v.y, v.x))); }

struct Pose {
  double x = 0.0;
  double y = 0.0;
  double yaw = 0.0;  // degrees, CCW from +x, [0, 360)

  Vec2 position() const { return {x, y}; }
  Vec2 heading() const { return unit_from_deg(yaw); }
};

// Bearing of a world direction as seen from `yaw`, clockwise-positive
// (right of heading is positive). Matches image x-axis convention.
inline double bearing_from(double yaw, double world_dir_deg) {
  return -wrap180(world_dir_deg - yaw);
}

}  // namespace dualnav
