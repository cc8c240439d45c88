#include "dualnav/trace.hpp"

#include "dualnav/errors.hpp"

namespace dualnav {

std::string pathway_name(Pathway p) {
  switch (p) {
    case Pathway::kSystemOne:
      return "system_one";
    case Pathway::kSystemTwo:
      return "system_two";
    case Pathway::kGateSkip:
      return "gate_skip";
  }
  return "?";
}

void DecisionTrace::check() const {
  if (t_end < t_start) throw RangeError("t_end", "must be >= t_start");
  if (pathway == Pathway::kGateSkip) {
    if (action.has_value()) throw RangeError("action", "GateSkip rows carry no action");
    if (!matched_conditions.empty()) {
      throw RangeError("matched_conditions", "GateSkip rows carry no matches");
    }
  }
}

}  // namespace dualnav
