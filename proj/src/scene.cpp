#include "dualnav/scene.hpp"

#include "dualnav/zones.hpp"

namespace dualnav {

SceneDescriptor build_scene(const Pose& pose, const WorldModel& world, Segmenter& segmenter,
                            SignReader& signs, const FrontCameraModel& cam,
                            const VanishingPoint* primary, VirtualTime t) {
  const auto masks = segmenter.segment(pose, world, t);
  const auto sign_hits = signs.read(pose, world, t);
  std::optional<GridCell> vp_cell;
  if (primary) vp_cell = primary->cell;
  const ZonePartition part = partition(vp_cell, cam.rows, cam.cols);
  return describe(masks, sign_hits, part);
}

SceneDescriptor build_scene_fresh(const Pose& pose, const WorldModel& world,
                                  const Providers& providers, VirtualTime t) {
  const auto candidates = detect_vp_candidates(pose, world, providers.camera);
  const VanishingPoint* primary = primary_vp(candidates);
  return build_scene(pose, world, *providers.segmenter, *providers.signs, providers.camera,
                     primary, t);
}

}  // namespace dualnav
