#pragma once

#include <cstdint>

namespace dualnav {

// Simulated episode time. Integer milliseconds keep traces bit-identical
// across runs; there is no wall-clock anywhere in the core.
struct VirtualTime {
  std::int64_t millis = 0;

  friend bool operator==(VirtualTime a, VirtualTime b) { return a.millis == b.millis; }
  friend bool operator!=(VirtualTime a, VirtualTime b) { return a.millis != b.millis; }
  friend bool operator<(VirtualTime a, VirtualTime b) { return a.millis < b.millis; }
  friend bool operator<=(VirtualTime a, VirtualTime b) { return a.millis <= b.millis; }
  friend bool operator>(VirtualTime a, VirtualTime b) { return a.millis > b.millis; }
  friend bool operator>=(VirtualTime a, VirtualTime b) { return a.millis >= b.millis; }
};

// Monotone accumulator owned by one episode. Components charge their cost
// here; the accounting identity (elapsed == sum of charges) holds by
// construction and is re-checked from trace records in tests.
class VirtualClock {
 public:
  VirtualTime now() const { return t_; }

  void charge_ms(double ms) {
    if (ms <= 0) return;
    t_.millis += static_cast<std::int64_t>(ms + 0.5);
  }

  void charge_exact(std::int64_t ms) {
    if (ms > 0) t_.millis += ms;
  }

 private:
  VirtualTime t_{};
};

}  // namespace dualnav
