#include "dualnav/kfc.hpp"

#include <cmath>

#include "dualnav/errors.hpp"

namespace dualnav {

double kfc_score(const PatchGrid& a, const PatchGrid& b) {
  if (!a.same_shape(b)) throw ShapeMismatch("kfc_score: grid shapes differ");
  const int cells = a.rows * a.cols;
  double sum = 0.0;
  for (int i = 0; i < cells; ++i) {
    const double* pa = a.data.data() + static_cast<std::size_t>(i) * a.dim;
    const double* pb = b.data.data() + static_cast<std::size_t>(i) * b.dim;
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (int d = 0; d < a.dim; ++d) {
      dot += pa[d] * pb[d];
      na += pa[d] * pa[d];
      nb += pb[d] * pb[d];
    }
    sum += dot / std::sqrt(na * nb);
  }
  return sum / cells;
}

GateDecision gate(GateState& state, const PatchGrid& frame, double threshold, VirtualTime now) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw RangeError("threshold", "gate threshold must be in [0, 1]");
  }
  GateDecision d;
  if (!state.key_frame.has_value()) {
    d.triggered = true;
    d.score = 1.0;
  } else {
    d.score = kfc_score(*state.key_frame, frame);
    d.triggered = d.score < threshold;
  }
  if (d.triggered) {
    state.key_frame = frame;
    state.last_trigger_time = now;
  }
  return d;
}

}  // namespace dualnav
