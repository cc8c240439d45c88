#pragma once

#include <string>

#include "dualnav/errors.hpp"

namespace dualnav {

// A navigation task: free-text description plus the exact string the
// arrival check must find among OCR'd signs (e.g. "306").
struct GoalSpec {
  std::string goal_description;
  std::string destination_text;

  void validate() const {
    if (goal_description.empty()) throw RangeError("goal_description", "must not be empty");
    if (destination_text.empty()) throw RangeError("destination_text", "must not be empty");
  }
};

}  // namespace dualnav
