#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dualnav/action.hpp"
#include "dualnav/geometry.hpp"
#include "dualnav/vtime.hpp"

namespace dualnav {

enum class Pathway { kSystemOne, kSystemTwo, kGateSkip };

std::string pathway_name(Pathway p);

// One decision event (or skipped gate) in an episode. GateSkip rows carry
// no action and no matched rules.
struct DecisionTrace {
  VirtualTime t_start;
  VirtualTime t_end;
  Pose pose;
  Pathway pathway = Pathway::kGateSkip;
  std::optional<Action> action;
  std::vector<int> matched_conditions;  // sorted rule indices
  Action gt_action = Action::forward();
  double kfc_score = 0.0;

  // Matching context used for turnover accounting; absent when the
  // matching stage did not run (gate skips, arrival hits, vlm modes).
  bool match_ran = false;
  std::optional<Action> top1_action;
  double top1_score = 0.0;
  int tokens_used = 0;  // SystemTwo rows only

  void check() const;  // enforces the row invariants
};

// Movement/turn bookkeeping between decisions; carries its clock charge so
// the accounting identity can be re-verified from the trace alone.
struct MotionRecord {
  VirtualTime t_start;
  VirtualTime t_end;
  Pose pose_after;
  double distance_m = 0.0;
  double turned_deg = 0.0;
  std::int64_t charged_ms = 0;
};

}  // namespace dualnav
