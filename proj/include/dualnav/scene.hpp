#pragma once

#include "dualnav/describe.hpp"
#include "dualnav/perception.hpp"
#include "dualnav/vanishing_point.hpp"

namespace dualnav {

// Runs the spatial/textual pipeline at a pose: segmentation, sign reading,
// zone partition around the given (or freshly detected) primary VP, then
// the rendered scene description.
SceneDescriptor build_scene(const Pose& pose, const WorldModel& world, Segmenter& segmenter,
                            SignReader& signs, const FrontCameraModel& cam,
                            const VanishingPoint* primary, VirtualTime t = VirtualTime{0});

// Standalone variant detecting VP candidates at the pose itself.
SceneDescriptor build_scene_fresh(const Pose& pose, const WorldModel& world,
                                  const Providers& providers, VirtualTime t = VirtualTime{0});

}  // namespace dualnav
