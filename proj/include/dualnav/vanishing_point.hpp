#pragma once

#include <vector>

#include "dualnav/perception.hpp"
#include "dualnav/world.hpp"

namespace dualnav {

// Image-plane convergence point of a corridor axis. `direction` is the
// world-frame axis bearing; `bearing` the clockwise-positive image-plane
// angle relative to the current heading at detection time.
struct VanishingPoint {
  GridCell cell;
  double direction = 0.0;  // world-frame degrees
  double bearing = 0.0;    // relative, clockwise-positive
  int age = 1;             // consecutive frames observed
  bool stable = false;     // age >= 3
};

// Ground-truth VP candidates: one per corridor axis with enough free run
// from the pose (cardinal directions; corridors are axis-aligned). The
// direction walked backwards (> 135 deg off heading) is excluded; lateral
// axes clamp to the grid's edge columns. Throws OutOfWorld.
std::vector<VanishingPoint> detect_vp_candidates(const Pose& pose, const WorldModel& world,
                                                 const FrontCameraModel& cam = FrontCameraModel{},
                                                 double min_run_m = 3.0);

// Maintains VP ages across frames by nearest-cell matching (Chebyshev
// radius 1). Owned by the episode loop; single writer.
class VpTracker {
 public:
  // Re-detects candidates at `pose` and folds them into the tracked set.
  const std::vector<VanishingPoint>& observe(const Pose& pose, const WorldModel& world,
                                             const FrontCameraModel& cam = FrontCameraModel{});
  const std::vector<VanishingPoint>& current() const { return vps_; }
  void reset() { vps_.clear(); }

 private:
  std::vector<VanishingPoint> vps_;
};

// The VP used for zone partitioning: most heading-aligned (smallest
// absolute bearing, ties to the older one); null when none detected.
const VanishingPoint* primary_vp(const std::vector<VanishingPoint>& vps);

}  // namespace dualnav
