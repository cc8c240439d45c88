#pragma once

#include <unordered_map>

#include "dualnav/oracle.hpp"
#include "dualnav/perception.hpp"
#include "dualnav/reasoner.hpp"

namespace dualnav {

struct ScriptedBackendOptions {
  // Probability the emitted action equals the ground-truth label; the
  // complement substitutes a seeded uniformly-random wrong action.
  double accuracy_preset = 1.0;
  std::uint64_t seed = 1;
};

// Deterministic reasoner stand-in grounded in the simulator. Real-time
// requests resolve the frame pose through the registry, look up the path
// oracle's label, and emit templated reasoning text ending in the action
// token. Table-gen requests synthesize a rule set from descriptors
// rendered along the route. Honors forced-action decoding and reacts to
// the suppression bias by wrapping up.
class ScriptedBackend : public ReasonerBackend {
 public:
  ScriptedBackend(const WorldModel& world, Providers providers, ScriptedBackendOptions opts);

  void register_frame(std::uint64_t frame_id, const Pose& pose);

  std::unique_ptr<GenerationSession> begin(const ReasonerRequest& req) override;

  const ScriptedBackendOptions& options() const { return opts_; }

 private:
  const WorldModel& world_;
  Providers providers_;
  ScriptedBackendOptions opts_;
  std::unordered_map<std::uint64_t, Pose> frames_;
};

// Rule synthesis used by the scripted backend's table-gen mode, exposed
// for tests: descriptors rendered at route waypoints, conflicting texts
// dropped, most frequent kept, padded into the 6..9 band.
ConditionActionTable synthesize_table(const WorldModel& world, const Pose& start,
                                      const GoalSpec& goal, const Providers& providers);

}  // namespace dualnav
