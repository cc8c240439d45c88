#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dualnav/config.hpp"
#include "dualnav/matcher.hpp"
#include "dualnav/oracle.hpp"
#include "dualnav/perception.hpp"
#include "dualnav/reasoner.hpp"
#include "dualnav/trace.hpp"
#include "dualnav/world.hpp"

namespace dualnav {

// dual: the full two-pathway pipeline. vlm_only: gate disabled (every
// frame decides) and matching disabled (every decision escalates), no
// augmentation. vlm_augmented: like vlm_only but scene description lines
// are attached to every request.
enum class RunMode { kDual, kVlmOnly, kVlmAugmented };

std::string run_mode_name(RunMode m);
RunMode run_mode_from_name(const std::string& name);

struct RunOptions {
  RunMode mode = RunMode::kDual;
  double step_m = 0.25;
  // Charge System Two per decision as system_two_ms * tokens_used / 150
  // instead of the flat constant (token-budget sweeps).
  bool s2_token_cost = false;
};

enum class StopReason { kArrived, kTimeout, kEmergencyStopped, kOracleDeclaredLost };
std::string stop_reason_name(StopReason r);

struct EpisodeResult {
  bool success = false;  // success <=> stop_reason == kArrived
  VirtualTime elapsed;
  double distance_m = 0.0;
  StopReason stop_reason = StopReason::kTimeout;
  Pose final_pose;
  std::vector<DecisionTrace> traces;
  std::vector<MotionRecord> motions;
};

// Virtual-clock episode loop: capture/gate at 0.25 m (or turn-slice)
// granularity, System One matching, System Two escalation, FSM execution,
// ultrasonic preemption every step. All failures become stop reasons.
// `table` is required in dual mode (built offline by generate_table).
EpisodeResult run_episode(const WorldModel& world, const Pose& start, const GoalSpec& goal,
                          const Config& cfg, const Providers& providers,
                          ReasonerBackend& backend, const ConditionActionTable* table,
                          const RunOptions& opts = {});

}  // namespace dualnav
