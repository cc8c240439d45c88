#include "dualnav/action.hpp"

#include <cctype>

#include "dualnav/errors.hpp"

namespace dualnav {

namespace {

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Case-insensitive keyword match at position i with word boundaries on
// both sides. Returns the position one past the keyword, or npos.
std::size_t match_keyword(const std::string& s, std::size_t i, const char* kw) {
  if (i > 0 && is_word_char(s[i - 1])) return std::string::npos;
  std::size_t j = i;
  for (const char* p = kw; *p; ++p, ++j) {
    if (j >= s.size()) return std::string::npos;
    if (std::tolower(static_cast<unsigned char>(s[j])) != *p) return std::string::npos;
  }
  if (j < s.size() && is_word_char(s[j])) return std::string::npos;
  return j;
}

std::size_t skip_ws(const std::string& s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

// Parses "( <int> )" with optional interior whitespace; angle must land in
// (0, 180]. Returns position past ')' or npos.
std::size_t match_angle(const std::string& s, std::size_t i, int& angle_out) {
  i = skip_ws(s, i);
  if (i >= s.size() || s[i] != '(') return std::string::npos;
  i = skip_ws(s, i + 1);
  std::size_t start = i;
  long value = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    value = value * 10 + (s[i] - '0');
    if (value > 100000) return std::string::npos;
    ++i;
  }
  if (i == start) return std::string::npos;
  i = skip_ws(s, i);
  if (i >= s.size() || s[i] != ')') return std::string::npos;
  if (value < 1 || value > 180) return std::string::npos;
  angle_out = static_cast<int>(value);
  return i + 1;
}

}  // namespace

int Action::check_angle(int angle_deg) {
  if (angle_deg < 1 || angle_deg > 180) {
    throw RangeError("angle", "turn angle must be in (0, 180]");
  }
  return angle_deg;
}

std::string action_render(const Action& a) {
  switch (a.kind()) {
    case Action::Kind::kForward:
      return "FORWARD";
    case Action::Kind::kCw:
      return "CW(" + std::to_string(a.angle_deg()) + ")";
    case Action::Kind::kCcw:
      return "CCW(" + std::to_string(a.angle_deg()) + ")";
    case Action::Kind::kTurnBack:
      return "TURN_BACK";
    case Action::Kind::kIdle:
      return "IDLE";
    case Action::Kind::kEmergencyStop:
      return "EMERGENCY_STOP";
  }
  return "";
}

std::optional<Action> action_try_parse(const std::string& text) {
  std::optional<Action> found;
  for (std::size_t i = 0; i < text.size(); ++i) {
    std::size_t end;
    int angle = 0;
    if ((end = match_keyword(text, i, "forward")) != std::string::npos) {
      found = Action::forward();
    } else if ((end = match_keyword(text, i, "turn_back")) != std::string::npos) {
      found = Action::turn_back();
    } else if ((end = match_keyword(text, i, "idle")) != std::string::npos) {
      found = Action::idle();
    } else if ((end = match_keyword(text, i, "ccw")) != std::string::npos) {
      std::size_t after = match_angle(text, end, angle);
      if (after == std::string::npos) continue;
      end = after;
      found = Action::ccw(angle);
    } else if ((end = match_keyword(text, i, "cw")) != std::string::npos) {
      std::size_t after = match_angle(text, end, angle);
      if (after == std::string::npos) continue;
      end = after;
      found = Action::cw(angle);
    } else {
      continue;
    }
    i = end - 1;  // resume after the token; the last token wins
  }
  return found;
}

Action action_parse(const std::string& text) {
  auto a = action_try_parse(text);
  if (!a) throw ParseError("no action token found in: \"" + text + "\"");
  return *a;
}

}  // namespace dualnav
