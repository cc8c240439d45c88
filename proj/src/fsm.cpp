#include "dualnav/fsm.hpp"

#include <cmath>

namespace dualnav {

namespace {

constexpr double kBranchBearingDeg = 15.0;  // a turn target must be at least this far off axis
constexpr double kApproachBudgetM = 2.5;

const VanishingPoint* pick_branch_vp(const std::vector<VanishingPoint>& vps, bool clockwise) {
  const Action probe = clockwise ? Action::cw(90) : Action::ccw(90);
  const VanishingPoint* vp = select_vp(probe, vps);
  if (!vp) return nullptr;
  if (clockwise && vp->bearing <= kBranchBearingDeg) return nullptr;
  if (!clockwise && vp->bearing >= -kBranchBearingDeg) return nullptr;
  return vp;
}

MotionCommand halt() {
  MotionCommand cmd;
  cmd.kind = MotionCommand::Kind::kHalt;
  return cmd;
}

MotionCommand rotate(double target) {
  MotionCommand cmd;
  cmd.kind = MotionCommand::Kind::kRotate;
  cmd.target_yaw = wrap360(target);
  return cmd;
}

MotionCommand advance(double heading, double speed) {
  MotionCommand cmd;
  cmd.kind = MotionCommand::Kind::kAdvance;
  cmd.heading = wrap360(heading);
  cmd.speed = speed;
  return cmd;
}

void enter_forward(ExecState& state, const Pose& pose) {
  state.phase = ExecPhase::kMovingForward;
  const VanishingPoint* vp = select_vp(Action::forward(), state.tracked_vps);
  state.hold_heading = vp ? vp->direction : snap_cardinal(pose.yaw);
}

}  // namespace

double snap_cardinal(double yaw_deg) {
  return wrap360(std::round(wrap360(yaw_deg) / 90.0) * 90.0);
}

const VanishingPoint* select_vp(const Action& action, const std::vector<VanishingPoint>& vps) {
  const VanishingPoint* best = nullptr;
  switch (action.kind()) {
    case Action::Kind::kCw:
      for (const auto& vp : vps) {
        if (!best || vp.bearing > best->bearing ||
            (vp.bearing == best->bearing && vp.age > best->age)) {
          best = &vp;
        }
      }
      return best;
    case Action::Kind::kCcw:
      for (const auto& vp : vps) {
        if (!best || vp.bearing < best->bearing ||
            (vp.bearing == best->bearing && vp.age > best->age)) {
          best = &vp;
        }
      }
      return best;
    case Action::Kind::kForward:
      for (const auto& vp : vps) {
        if (!vp.stable) continue;
        if (!best || vp.age > best->age ||
            (vp.age == best->age && std::abs(vp.bearing) < std::abs(best->bearing))) {
          best = &vp;
        }
      }
      return best;
    default:
      return nullptr;  // TurnBack selects a newly stable VP after rotating
  }
}

bool validate_alignment(const Pose& pose, const VanishingPoint& vp) {
  return angular_distance(pose.yaw, vp.direction) <= kAlignToleranceDeg;
}

bool fsm_can_accept(const ExecState& state, double range_m) {
  if (state.phase == ExecPhase::kStopped) return range_m >= kRecoverRangeM;
  return true;
}

MotionCommand step_fsm(ExecState& state, const Pose& pose, const std::optional<Action>& action_in,
                       const std::vector<VanishingPoint>& vps, double range_m, const Config& cfg,
                       Rng& rng) {
  state.tracked_vps = vps;

  // Safety preemption dominates every state and input.
  if (range_m < kStopRangeM) {
    state.phase = ExecPhase::kStopped;
    return halt();
  }

  if (action_in && fsm_can_accept(state, range_m)) {
    const Action& a = *action_in;
    switch (a.kind()) {
      case Action::Kind::kIdle:
        state.phase = ExecPhase::kIdle;
        return MotionCommand{};
      case Action::Kind::kEmergencyStop:
        state.phase = ExecPhase::kStopped;
        return halt();
      case Action::Kind::kForward:
        enter_forward(state, pose);
        break;
      case Action::Kind::kCw:
      case Action::Kind::kCcw: {
        const bool clockwise = a.kind() == Action::Kind::kCw;
        state.phase = clockwise ? ExecPhase::kTurningCw : ExecPhase::kTurningCcw;
        state.pending_angle = a.angle_deg();
        state.vp_locked = false;
        state.approach_budget_m = kApproachBudgetM;
        state.target_yaw =
            snap_cardinal(pose.yaw + (clockwise ? -a.angle_deg() : a.angle_deg()));
        break;
      }
      case Action::Kind::kTurnBack: {
        state.phase = ExecPhase::kTurningBack;
        const double jitter = rng.uniform(-20.0, 20.0);
        state.target_yaw = wrap360(pose.yaw + 180.0 + jitter);
        break;
      }
    }
  }

  switch (state.phase) {
    case ExecPhase::kIdle:
      return MotionCommand{};
    case ExecPhase::kStopped:
      return halt();
    case ExecPhase::kTurningBack:
      if (angular_distance(pose.yaw, state.target_yaw) <= kAlignToleranceDeg) {
        enter_forward(state, pose);
        return advance(*state.hold_heading, cfg.robot_speed);
      }
      return rotate(state.target_yaw);
    case ExecPhase::kTurningCw:
    case ExecPhase::kTurningCcw: {
      const bool clockwise = state.phase == ExecPhase::kTurningCw;
      if (!state.vp_locked) {
        if (const VanishingPoint* vp = pick_branch_vp(vps, clockwise)) {
          state.target_yaw = vp->direction;
          state.vp_locked = true;
        } else if (state.approach_budget_m > 0.0) {
          // Branch not visible yet: creep forward until it opens.
          return advance(snap_cardinal(pose.yaw), cfg.robot_speed);
        }
      }
      if (angular_distance(pose.yaw, state.target_yaw) <= kAlignToleranceDeg) {
        enter_forward(state, pose);
        return advance(*state.hold_heading, cfg.robot_speed);
      }
      return rotate(state.target_yaw);
    }
    case ExecPhase::kMovingForward: {
      if (const VanishingPoint* vp = select_vp(Action::forward(), vps)) {
        state.hold_heading = vp->direction;
      } else if (!state.hold_heading) {
        state.hold_heading = snap_cardinal(pose.yaw);
      }
      return advance(*state.hold_heading, cfg.robot_speed);
    }
  }
  return MotionCommand{};
}

}  // namespace dualnav
