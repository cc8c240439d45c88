#pragma once

#include <optional>
#include <vector>

#include "dualnav/action.hpp"
#include "dualnav/config.hpp"
#include "dualnav/geometry.hpp"
#include "dualnav/rng.hpp"
#include "dualnav/vanishing_point.hpp"

namespace dualnav {

enum class ExecPhase : std::uint8_t {
  kIdle = 0,       // no behavior installed (episode start or finished)
  kMovingForward,
  kTurningCw,
  kTurningCcw,
  kTurningBack,
  kStopped
};

// Emergency stop engages below this range and releases above the larger
// one; the gap prevents stop/start oscillation.
inline constexpr double kStopRangeM = 0.3;
inline constexpr double kRecoverRangeM = 0.5;
inline constexpr double kAlignToleranceDeg = 5.0;
inline constexpr double kTurnRateDps = 90.0;

struct MotionCommand {
  enum class Kind : std::uint8_t { kNone, kRotate, kAdvance, kHalt };
  Kind kind = Kind::kNone;
  double target_yaw = 0.0;  // rotate target, degrees
  double heading = 0.0;     // advance: world heading to hold
  double speed = 0.0;       // m/s
};

struct ExecState {
  ExecPhase phase = ExecPhase::kIdle;
  double target_yaw = 0.0;          // turning phases
  bool vp_locked = false;           // CW/CCW target re-aimed onto a branch VP
  double approach_budget_m = 0.0;   // forward allowance while a branch opens
  int pending_angle = 0;
  std::optional<double> hold_heading;  // MovingForward corridor axis
  std::vector<VanishingPoint> tracked_vps;
};

// VP-candidate selection rules. CW picks the rightmost (max bearing, ties
// older), CCW the leftmost, Forward the oldest stable one (ties to the
// most heading-aligned). TurnBack defers selection until after rotation.
const VanishingPoint* select_vp(const Action& action, const std::vector<VanishingPoint>& vps);

bool validate_alignment(const Pose& pose, const VanishingPoint& vp);

// Whether a new decision may be installed right now (Stopped requires the
// range to clear the recovery threshold first).
bool fsm_can_accept(const ExecState& state, double range_m);

// One control tick. Preemption first: range below kStopRangeM forces
// Stopped whatever the state or input. `action_in` installs a new
// behavior; otherwise the current phase continues. Deterministic given
// (state, pose, inputs, rng state).
MotionCommand step_fsm(ExecState& state, const Pose& pose, const std::optional<Action>& action_in,
                       const std::vector<VanishingPoint>& vps, double range_m, const Config& cfg,
                       Rng& rng);

// Nearest cardinal direction; corridor axes are grid-aligned.
double snap_cardinal(double yaw_deg);

}  // namespace dualnav
