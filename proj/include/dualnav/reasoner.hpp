#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dualnav/action.hpp"
#include "dualnav/config.hpp"
#include "dualnav/goal.hpp"
#include "dualnav/table.hpp"
#include "dualnav/vtime.hpp"

namespace dualnav {

enum class ReasonMode { kTableGen, kAdditionalThinking };

struct ReasonerRequest {
  GoalSpec goal;
  std::uint64_t frame_id = 0;
  std::vector<std::string> augmentation;  // scene description lines, verbatim
  ReasonMode mode = ReasonMode::kAdditionalThinking;
  std::string feedback;  // previous validation failure, table-gen retries only
};

// Non-action token penalty ramp: zero before the onset, linear up to
// b_max at the token limit. Backends map the bias to their own logit
// scale; the scripted backend treats bias >= b_max/2 as "wrap it up".
struct SuppressionSchedule {
  int max_tokens = 150;
  int onset = 120;  // floor(onset_fraction * max_tokens)
  double b_max = 10.0;

  static SuppressionSchedule for_budget(int max_tokens, double onset_fraction,
                                        double b_max = 10.0);
  double bias(int t) const;
};

struct StepControl {
  double nonaction_bias = 0.0;
  bool forced = false;  // only action-grammar tokens permitted
};

// One generation stream. Checkpoints abstract the backend's decode state
// (K-V cache or equivalent); restoring must reproduce the stream exactly.
class GenerationSession {
 public:
  virtual ~GenerationSession() = default;
  virtual std::optional<std::string> next_token(const StepControl& ctrl) = 0;
  virtual std::uint64_t save_checkpoint() = 0;
  virtual void restore_checkpoint(std::uint64_t handle) = 0;
};

class ReasonerBackend {
 public:
  virtual ~ReasonerBackend() = default;
  virtual std::unique_ptr<GenerationSession> begin(const ReasonerRequest& req) = 0;
  // Simulation hook: the episode loop announces each captured frame so
  // grounded backends can resolve scene references. Default ignores it.
  virtual void register_frame(std::uint64_t /*frame_id*/, const Pose& /*pose*/) {}
};

struct ThinkingResult {
  Action action = Action::forward();
  int tokens_used = 0;
  bool fallback_used = false;
  std::vector<std::string> tokens;  // full stream, prefix preserved on fallback
};

// Budgeted decode under the suppression schedule. If the stream ends
// without a parseable action, the decode state is restored to the onset
// checkpoint and the tail regenerated in forced-action mode, so the call
// returns an Action for every conforming backend. Charges system_two_ms
// once (fallback included) when a clock is supplied.
// Throws ReasonerUnavailable on backend failure.
ThinkingResult additional_thinking(const ReasonerRequest& req, ReasonerBackend& backend,
                                   const Config& cfg, VirtualClock* clock = nullptr);

// Offline rule-set generation: invoke the backend, validate the output
// against the "cat/1" schema and table invariants, and re-invoke with the
// failure reason appended until a valid table appears. Each attempt
// charges table_gen_ms. Throws TableGenExhausted after max_retries.
ConditionActionTable generate_table(const ReasonerRequest& req, ReasonerBackend& backend,
                                    const Config& cfg, VirtualClock* clock = nullptr,
                                    int max_retries = 3);

}  // namespace dualnav
