#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace dualnav {

// Discrete command vocabulary consumed by the executor FSM.
// CW/CCW carry an integer angle in (0, 180]. Idle ends an episode;
// EmergencyStop preempts everything and is never produced by text parsing
// (it is sourced from range sensing, not reasoning).
class Action {
 public:
  enum class Kind : std::uint8_t { kForward, kCw, kCcw, kTurnBack, kIdle, kEmergencyStop };

  static Action forward() { return Action(Kind::kForward, 0); }
  static Action cw(int angle_deg) { return Action(Kind::kCw, check_angle(angle_deg)); }
  static Action ccw(int angle_deg) { return Action(Kind::kCcw, check_angle(angle_deg)); }
  static Action turn_back() { return Action(Kind::kTurnBack, 0); }
  static Action idle() { return Action(Kind::kIdle, 0); }
  static Action emergency_stop() { return Action(Kind::kEmergencyStop, 0); }

  Kind kind() const { return kind_; }
  int angle_deg() const { return angle_; }
  bool is_turn() const { return kind_ == Kind::kCw || kind_ == Kind::kCcw; }

  friend bool operator==(const Action& a, const Action& b) {
    return a.kind_ == b.kind_ && a.angle_ == b.angle_;
  }
  friend bool operator!=(const Action& a, const Action& b) { return !(a == b); }
  friend bool operator<(const Action& a, const Action& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    return a.angle_ < b.angle_;
  }

 private:
  Action(Kind k, int angle) : kind_(k), angle_(angle) {}
  static int check_angle(int angle_deg);

  Kind kind_;
  int angle_;
};

// Canonical surface forms: "FORWARD", "CW(30)", "CCW(45)", "TURN_BACK",
// "IDLE". EmergencyStop renders as "EMERGENCY_STOP" but does not parse.
std::string action_render(const Action& a);

// Scans `text` for action tokens (case-insensitive, whitespace-tolerant,
// including inside surrounding prose) and returns the last one found.
// Throws ParseError if no valid action token is present.
Action action_parse(const std::string& text);

// Non-throwing variant used by decode loops.
std::optional<Action> action_try_parse(const std::string& text);

}  // namespace dualnav
