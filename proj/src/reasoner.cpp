#include "dualnav/reasoner.hpp"

#include <cmath>

#include "dualnav/errors.hpp"

namespace dualnav {

SuppressionSchedule SuppressionSchedule::for_budget(int max_tokens, double onset_fraction,
                                                    double b_max) {
  if (max_tokens < 1) throw RangeError("max_tokens", "must be >= 1");
  if (!(onset_fraction >= 0.0 && onset_fraction < 1.0)) {
    throw RangeError("suppression_onset_fraction", "must be in [0, 1)");
  }
  SuppressionSchedule s;
  s.max_tokens = max_tokens;
  s.onset = static_cast<int>(std::floor(onset_fraction * max_tokens));
  s.b_max = b_max;
  return s;
}

double SuppressionSchedule::bias(int t) const {
  if (t < onset) return 0.0;
  const int span = max_tokens - onset;
  if (span <= 0) return b_max;
  return b_max * static_cast<double>(t - onset) / static_cast<double>(span);
}

namespace {

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

}  // namespace

ThinkingResult additional_thinking(const ReasonerRequest& req, ReasonerBackend& backend,
                                   const Config& cfg, VirtualClock* clock) {
  if (req.mode != ReasonMode::kAdditionalThinking) {
    throw RangeError("mode", "additional_thinking requires an AdditionalThinking request");
  }
  const SuppressionSchedule schedule =
      SuppressionSchedule::for_budget(cfg.max_tokens, cfg.suppression_onset_fraction);

  std::unique_ptr<GenerationSession> session;
  try {
    session = backend.begin(req);
  } catch (const std::exception& e) {
    throw ReasonerUnavailable(std::string("backend begin failed: ") + e.what());
  }
  if (!session) throw ReasonerUnavailable("backend returned no session");

  ThinkingResult result;
  std::optional<std::uint64_t> checkpoint;
  try {
    for (int t = 0; t < schedule.max_tokens; ++t) {
      if (t == schedule.onset) checkpoint = session->save_checkpoint();
      auto tok = session->next_token({schedule.bias(t), false});
      if (!tok) break;
      result.tokens.push_back(std::move(*tok));
    }
  } catch (const std::exception& e) {
    throw ReasonerUnavailable(std::string("backend stream failed: ") + e.what());
  }

  std::optional<Action> action = action_try_parse(join_tokens(result.tokens));
  if (!action) {
    // Restore the decode state captured at the suppression onset and
    // regenerate the tail with only action-grammar tokens permitted.
    result.fallback_used = true;
    int resume = static_cast<int>(result.tokens.size());
    try {
      if (checkpoint && result.tokens.size() >= static_cast<std::size_t>(schedule.onset)) {
        session->restore_checkpoint(*checkpoint);
        result.tokens.resize(static_cast<std::size_t>(schedule.onset));
        resume = schedule.onset;
      }
      for (int t = resume; t < schedule.max_tokens; ++t) {
        auto tok = session->next_token({schedule.bias(t), true});
        if (!tok) break;
        result.tokens.push_back(*tok);
        if ((action = action_try_parse(*tok))) break;
      }
    } catch (const std::exception& e) {
      throw ReasonerUnavailable(std::string("backend fallback failed: ") + e.what());
    }
    if (!action) {
      throw ReasonerUnavailable("backend produced no action even under forced decoding");
    }
  }

  if (clock) clock->charge_ms(cfg.latency_profile.system_two_ms);
  result.action = *action;
  result.tokens_used = static_cast<int>(result.tokens.size());
  return result;
}

ConditionActionTable generate_table(const ReasonerRequest& req, ReasonerBackend& backend,
                                    const Config& cfg, VirtualClock* clock, int max_retries) {
  if (req.mode != ReasonMode::kTableGen) {
    throw RangeError("mode", "generate_table requires a TableGen request");
  }
  ReasonerRequest attempt_req = req;
  std::string last_error;
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    if (clock) clock->charge_ms(cfg.latency_profile.table_gen_ms);
    std::vector<std::string> tokens;
    try {
      auto session = backend.begin(attempt_req);
      if (!session) throw ReasonerUnavailable("backend returned no session");
      // Offline generation is not bound by the real-time token budget;
      // cap defensively so a runaway backend cannot hang the init.
      for (int t = 0; t < 65536; ++t) {
        auto tok = session->next_token({0.0, false});
        if (!tok) break;
        tokens.push_back(std::move(*tok));
      }
    } catch (const std::exception& e) {
      throw ReasonerUnavailable(std::string("backend failed during table generation: ") +
                                e.what());
    }
    try {
      ConditionActionTable table = ConditionActionTable::from_json_text(join_tokens(tokens));
      if (table.goal().goal_description != req.goal.goal_description ||
          table.goal().destination_text != req.goal.destination_text) {
        throw ParseError("table goal does not match the requested goal");
      }
      return table;
    } catch (const Error& e) {
      last_error = e.what();
      attempt_req.feedback = last_error;
    }
  }
  throw TableGenExhausted("no valid table after " + std::to_string(max_retries) +
                          " attempts; last error: " + last_error);
}

}  // namespace dualnav
