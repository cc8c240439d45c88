#include "dualnav/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dualnav/errors.hpp"

namespace dualnav {

namespace {

void check_unit(const char* name, double v) {
  if (!(v >= 0.0 && v <= 1.0)) throw RangeError(name, "must be in [0, 1]");
}

void check_nonneg(const char* name, double v) {
  if (!(v >= 0.0)) throw RangeError(name, "must be >= 0");
}

}  // namespace

Config validate_config(const Config& cfg) {
  check_unit("kfc_threshold", cfg.kfc_threshold);
  check_unit("arrival_similarity_threshold", cfg.arrival_similarity_threshold);
  check_unit("match_threshold", cfg.match_threshold);
  if (cfg.max_tokens < 1) throw RangeError("max_tokens", "must be >= 1");
  check_unit("suppression_onset_fraction", cfg.suppression_onset_fraction);
  if (cfg.suppression_onset_fraction >= 1.0) {
    throw RangeError("suppression_onset_fraction", "must be < 1");
  }
  check_nonneg("latency_profile.segmentation_ms", cfg.latency_profile.segmentation_ms);
  check_nonneg("latency_profile.ocr_ms", cfg.latency_profile.ocr_ms);
  check_nonneg("latency_profile.textgen_ms", cfg.latency_profile.textgen_ms);
  check_nonneg("latency_profile.condition_match_ms", cfg.latency_profile.condition_match_ms);
  check_nonneg("latency_profile.encoder_ms", cfg.latency_profile.encoder_ms);
  check_nonneg("latency_profile.system_two_ms", cfg.latency_profile.system_two_ms);
  check_nonneg("latency_profile.table_gen_ms", cfg.latency_profile.table_gen_ms);
  if (!(cfg.robot_speed > 0.0)) throw RangeError("robot_speed", "must be > 0");
  if (!(cfg.timeout_s > 0.0)) throw RangeError("timeout_s", "must be > 0");
  return cfg;
}

namespace {

using nlohmann::json;

json profile_to_json(const LatencyProfile& p) {
  return json{{"segmentation_ms", p.segmentation_ms},
              {"ocr_ms", p.ocr_ms},
              {"textgen_ms", p.textgen_ms},
              {"condition_match_ms", p.condition_match_ms},
              {"encoder_ms", p.encoder_ms},
              {"system_two_ms", p.system_two_ms},
              {"table_gen_ms", p.table_gen_ms}};
}

LatencyProfile profile_from_json(const json& j) {
  LatencyProfile p;
  p.segmentation_ms = j.value("segmentation_ms", p.segmentation_ms);
  p.ocr_ms = j.value("ocr_ms", p.ocr_ms);
  p.textgen_ms = j.value("textgen_ms", p.textgen_ms);
  p.condition_match_ms = j.value("condition_match_ms", p.condition_match_ms);
  p.encoder_ms = j.value("encoder_ms", p.encoder_ms);
  p.system_two_ms = j.value("system_two_ms", p.system_two_ms);
  p.table_gen_ms = j.value("table_gen_ms", p.table_gen_ms);
  return p;
}

}  // namespace

std::string config_to_json_text(const Config& cfg) {
  json j{{"kfc_threshold", cfg.kfc_threshold},
         {"arrival_similarity_threshold", cfg.arrival_similarity_threshold},
         {"match_threshold", cfg.match_threshold},
         {"max_tokens", cfg.max_tokens},
         {"suppression_onset_fraction", cfg.suppression_onset_fraction},
         {"latency_profile", profile_to_json(cfg.latency_profile)},
         {"robot_speed", cfg.robot_speed},
         {"timeout_s", cfg.timeout_s},
         {"seed", cfg.seed}};
  return j.dump();
}

Config config_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("config JSON: ") + e.what());
  }
  Config cfg;
  cfg.kfc_threshold = j.value("kfc_threshold", cfg.kfc_threshold);
  cfg.arrival_similarity_threshold =
      j.value("arrival_similarity_threshold", cfg.arrival_similarity_threshold);
  cfg.match_threshold = j.value("match_threshold", cfg.match_threshold);
  cfg.max_tokens = j.value("max_tokens", cfg.max_tokens);
  cfg.suppression_onset_fraction =
      j.value("suppression_onset_fraction", cfg.suppression_onset_fraction);
  if (j.contains("latency_profile")) {
    cfg.latency_profile = profile_from_json(j.at("latency_profile"));
  }
  cfg.robot_speed = j.value("robot_speed", cfg.robot_speed);
  cfg.timeout_s = j.value("timeout_s", cfg.timeout_s);
  cfg.seed = j.value("seed", cfg.seed);
  return validate_config(cfg);
}

Config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return config_from_json_text(ss.str());
}

}  // namespace dualnav
