#pragma once

#include <string>
#include <vector>

#include "dualnav/action.hpp"
#include "dualnav/embedding.hpp"
#include "dualnav/goal.hpp"

namespace dualnav {

struct ConditionRule {
  std::string condition;
  Action action = Action::forward();
};

// Goal-specific rule set precomputed offline by the reasoner; System One
// matches scenes against it. Rule embeddings are cached once and then
// read-only.
class ConditionActionTable {
 public:
  ConditionActionTable(GoalSpec goal, std::vector<ConditionRule> rules);

  const GoalSpec& goal() const { return goal_; }
  const std::vector<ConditionRule>& rules() const { return rules_; }
  const std::vector<TextEmbedding>& embeddings() const { return embeddings_; }
  std::size_t size() const { return rules_.size(); }

  // "cat/1" schema round-trip. Parsing validates all table invariants and
  // throws ParseError/RangeError with the reason (fed back to the
  // generator's retry loop).
  std::string to_json_text() const;
  static ConditionActionTable from_json_text(const std::string& text);

  static void save_file(const ConditionActionTable& table, const std::string& path);
  static ConditionActionTable load_file(const std::string& path);

 private:
  void validate() const;

  GoalSpec goal_;
  std::vector<ConditionRule> rules_;
  std::vector<TextEmbedding> embeddings_;
};

}  // namespace dualnav
