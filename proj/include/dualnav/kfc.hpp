#pragma once

#include <optional>

#include "dualnav/patch_grid.hpp"
#include "dualnav/vtime.hpp"

namespace dualnav {

// Key Frame Compare: structural-change gate. Patch-wise comparison against
// the last decision-triggering frame; a global pooled embedding would miss
// local layout changes (corners, splits) that matter for navigation.

// Mean over all cells of the per-cell cosine. Range [-1, 1]; symmetric.
// Throws ShapeMismatch when grids disagree in rows/cols/dim.
double kfc_score(const PatchGrid& a, const PatchGrid& b);

struct GateState {
  std::optional<PatchGrid> key_frame;  // empty only before the first frame
  std::optional<VirtualTime> last_trigger_time;
};

struct GateDecision {
  bool triggered = false;
  double score = 1.0;  // vs the previous key frame; 1.0 on cold start
};

// Cold start always triggers. Otherwise triggers when the score against
// the key frame falls below `threshold`; on trigger the frame becomes the
// new key frame, otherwise state is unchanged.
GateDecision gate(GateState& state, const PatchGrid& frame, double threshold,
                  VirtualTime now = VirtualTime{0});

}  // namespace dualnav
