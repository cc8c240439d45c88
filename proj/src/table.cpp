#include "dualnav/table.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dualnav/errors.hpp"

namespace dualnav {

ConditionActionTable::ConditionActionTable(GoalSpec goal, std::vector<ConditionRule> rules)
    : goal_(std::move(goal)), rules_(std::move(rules)) {
  validate();
  embeddings_.reserve(rules_.size());
  for (const auto& r : rules_) embeddings_.push_back(embed_text(r.condition));
}

void ConditionActionTable::validate() const {
  goal_.validate();
  if (rules_.empty() || rules_.size() > 32) {
    throw RangeError("rules", "table must hold 1..32 rules");
  }
  std::set<std::string> seen;
  for (const auto& r : rules_) {
    if (r.condition.empty()) throw RangeError("condition", "rule condition must not be empty");
    if (!seen.insert(r.condition).second) {
      throw RangeError("condition", "duplicate rule condition: " + r.condition);
    }
    if (r.action.kind() == Action::Kind::kIdle ||
        r.action.kind() == Action::Kind::kEmergencyStop) {
      throw RangeError("action", "rules must not map to IDLE or EMERGENCY_STOP");
    }
  }
}

std::string ConditionActionTable::to_json_text() const {
  nlohmann::json j;
  j["schema"] = "cat/1";
  j["goal_description"] = goal_.goal_description;
  j["destination_text"] = goal_.destination_text;
  j["rules"] = nlohmann::json::array();
  for (const auto& r : rules_) {
    j["rules"].push_back(
        {{"condition", r.condition}, {"action", action_render(r.action)}});
  }
  return j.dump(2);
}

ConditionActionTable ConditionActionTable::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("table JSON: ") + e.what());
  }
  if (j.value("schema", "") != "cat/1") throw ParseError("table JSON: schema must be cat/1");
  GoalSpec goal;
  goal.goal_description = j.value("goal_description", "");
  goal.destination_text = j.value("destination_text", "");
  std::vector<ConditionRule> rules;
  if (!j.contains("rules") || !j["rules"].is_array()) {
    throw ParseError("table JSON: missing rules array");
  }
  for (const auto& r : j["rules"]) {
    ConditionRule rule;
    rule.condition = r.value("condition", "");
    const std::string action_text = r.value("action", "");
    rule.action = action_parse(action_text);
    rules.push_back(std::move(rule));
  }
  return ConditionActionTable(std::move(goal), std::move(rules));
}

void ConditionActionTable::save_file(const ConditionActionTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write table file: " + path);
  out << table.to_json_text() << "\n";
}

ConditionActionTable ConditionActionTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open table file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

}  // namespace dualnav
