#pragma once

#include <optional>
#include <vector>

#include "dualnav/describe.hpp"
#include "dualnav/scene.hpp"
#include "dualnav/table.hpp"

namespace dualnav {

// Vision-Condition Matching outcome. Unique means every rule clearing the
// threshold agrees on one action; anything else escalates (turnover).
struct MatchResult {
  enum class Outcome { kUnique, kTurnover };
  Outcome outcome = Outcome::kTurnover;
  std::optional<Action> action;      // set iff Unique
  std::vector<int> matched;          // sorted rule indices >= threshold
  int best_index = -1;               // argmax cosine regardless of threshold
  double best_score = -1.0;
  std::vector<double> scores;        // per rule

  bool unique() const { return outcome == Outcome::kUnique; }
};

// Cosine of the scene text (concatenated description lines) against every
// rule embedding. Throws EmptyText when the descriptor renders empty; the
// caller logs that and treats it as a turnover.
MatchResult match_conditions(const SceneDescriptor& desc, const ConditionActionTable& table,
                             double threshold);

// Arrival check: scene-goal similarity at or above the threshold AND some
// sign text containing the destination text (case-insensitive substring).
bool check_arrival(const SceneDescriptor& desc, double scene_sim, const GoalSpec& goal,
                   double arrival_threshold);

// Attribute set of a descriptor (facts plus sign texts) used by the
// simulated scene-goal similarity.
std::vector<std::string> descriptor_attributes(const SceneDescriptor& desc);

// Jaccard overlap between attribute sets; empty union gives 0.
double attribute_jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b);

class SceneSimilarityProvider {
 public:
  virtual ~SceneSimilarityProvider() = default;
  virtual double similarity(const SceneDescriptor& current) = 0;
};

// Ground-truth provider: compares against the goal room's descriptor
// rendered at its doorway pose (computed once).
class GoalDoorwaySimilarity : public SceneSimilarityProvider {
 public:
  GoalDoorwaySimilarity(const WorldModel& world, const GoalSpec& goal,
                        const Providers& providers);
  double similarity(const SceneDescriptor& current) override;

 private:
  std::vector<std::string> goal_attrs_;
};

// Convenience wrapper matching the operation-level signature.
double scene_goal_similarity(const Pose& pose, const WorldModel& world, const GoalSpec& goal,
                             const Providers& providers, VirtualTime t = VirtualTime{0});

struct ValidationSample {
  SceneDescriptor desc;
  std::optional<Action> gt;  // empty means "needs turnover"
};

// Sweeps thresholds 1.00, 0.99, ..., 0.00 and returns the highest value
// maximizing precision of Unique decisions (precision 1 at zero
// predictions; ties break to the higher threshold).
double calibrate_threshold(const std::vector<ValidationSample>& validation,
                           const ConditionActionTable& table);

}  // namespace dualnav
