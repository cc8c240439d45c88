#pragma once

#include <cstdint>
#include <string>

namespace dualnav {

// Per-component virtual-clock costs in milliseconds. The defaults are the
// measured operating points this system is tuned around; "zero" profiles
// are used to separate decision quality from timing.
struct LatencyProfile {
  double segmentation_ms = 301.3;
  double ocr_ms = 383.4;
  double textgen_ms = 4.1;
  double condition_match_ms = 31.2;
  double encoder_ms = 30.0;
  double system_two_ms = 18000.0;
  double table_gen_ms = 29000.0;

  static LatencyProfile paper() { return LatencyProfile{}; }
  static LatencyProfile zero() { return LatencyProfile{0, 0, 0, 0, 0, 0, 0}; }
};

struct Config {
  double kfc_threshold = 0.45;
  double arrival_similarity_threshold = 0.80;
  // Similarity needed for a condition rule to count as matched. The
  // hashed-token embedding puts same-structure scenes at ~1.0 and any
  // structural delta at <= ~0.95, so the operating point sits high.
  double match_threshold = 0.97;
  int max_tokens = 150;
  double suppression_onset_fraction = 0.80;
  LatencyProfile latency_profile;
  double robot_speed = 0.30;   // m/s
  double timeout_s = 600.0;    // episode budget, virtual seconds
  std::uint64_t seed = 1;
};

// Returns cfg unchanged if every invariant holds; otherwise throws
// RangeError naming the first violating field (declaration order).
Config validate_config(const Config& cfg);

// JSON round-trip; any missing field keeps its default.
Config config_from_json_text(const std::string& text);
std::string config_to_json_text(const Config& cfg);
Config load_config_file(const std::string& path);

}  // namespace dualnav
