#include "dualnav/vanishing_point.hpp"

#include <algorithm>
#include <cmath>

#include "dualnav/errors.hpp"
#include "dualnav/geometry.hpp"

namespace dualnav {

std::vector<VanishingPoint> detect_vp_candidates(const Pose& pose, const WorldModel& world,
                                                 const FrontCameraModel& cam, double min_run_m) {
  if (!world.inside(pose.position())) {
    throw OutOfWorld("detect_vp_candidates: pose outside free space");
  }
  std::vector<VanishingPoint> out;
  const int horizon_row = cam.row_of_elevation(0.0);
  for (int k = 0; k < 4; ++k) {
    const double dir_deg = 90.0 * k;
    const RayHit hit = world.raycast_wall(pose.position(), unit_from_deg(dir_deg), 60.0);
    const double run = hit.hit ? hit.distance : 60.0;
    if (run < min_run_m) continue;
    const double b = bearing_from(pose.yaw, dir_deg);
    if (std::abs(b) > 135.0) continue;  // the axis behind the robot
    VanishingPoint vp;
    vp.direction = wrap360(dir_deg);
    vp.bearing = b;
    vp.cell = {horizon_row, cam.col_of_azimuth(b)};
    vp.age = 1;
    vp.stable = false;
    out.push_back(vp);
  }
  std::sort(out.begin(), out.end(),
            [](const VanishingPoint& a, const VanishingPoint& b) { return a.bearing < b.bearing; });
  return out;
}

const std::vector<VanishingPoint>& VpTracker::observe(const Pose& pose, const WorldModel& world,
                                                      const FrontCameraModel& cam) {
  std::vector<VanishingPoint> fresh = detect_vp_candidates(pose, world, cam);
  for (auto& vp : fresh) {
    for (const auto& old : vps_) {
      const int dr = std::abs(old.cell.row - vp.cell.row);
      const int dc = std::abs(old.cell.col - vp.cell.col);
      if (std::max(dr, dc) <= 1) {
        vp.age = old.age + 1;
        break;
      }
    }
    vp.stable = vp.age >= 3;
  }
  vps_ = std::move(fresh);
  return vps_;
}

const VanishingPoint* primary_vp(const std::vector<VanishingPoint>& vps) {
  const VanishingPoint* best = nullptr;
  for (const auto& vp : vps) {
    if (!best || std::abs(vp.bearing) < std::abs(best->bearing) ||
        (std::abs(vp.bearing) == std::abs(best->bearing) && vp.age > best->age)) {
      best = &vp;
    }
  }
  return best;
}

}  // namespace dualnav
