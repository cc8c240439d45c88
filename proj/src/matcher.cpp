#include "dualnav/matcher.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "dualnav/errors.hpp"

namespace dualnav {

MatchResult match_conditions(const SceneDescriptor& desc, const ConditionActionTable& table,
                             double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw RangeError("threshold", "match threshold must be in [0, 1]");
  }
  const TextEmbedding scene = embed_text(desc.joined_text());

  MatchResult res;
  res.scores.reserve(table.size());
  std::set<Action> unique_actions;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const double score = cosine(scene, table.embeddings()[i]);
    res.scores.push_back(score);
    if (score > res.best_score) {
      res.best_score = score;
      res.best_index = static_cast<int>(i);
    }
    if (score >= threshold) {
      res.matched.push_back(static_cast<int>(i));
      unique_actions.insert(table.rules()[i].action);
    }
  }
  if (unique_actions.size() == 1) {
    res.outcome = MatchResult::Outcome::kUnique;
    res.action = *unique_actions.begin();
  } else {
    res.outcome = MatchResult::Outcome::kTurnover;
  }
  return res;
}

namespace {

std::string lower(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

bool check_arrival(const SceneDescriptor& desc, double scene_sim, const GoalSpec& goal,
                   double arrival_threshold) {
  if (scene_sim < arrival_threshold) return false;
  const std::string needle = lower(goal.destination_text);
  for (const auto& s : desc.signs) {
    if (lower(s.text).find(needle) != std::string::npos) return true;
  }
  return false;
}

std::vector<std::string> descriptor_attributes(const SceneDescriptor& desc) {
  std::set<std::string> attrs;
  for (const auto& f : desc.facts) {
    attrs.insert(surface_class_name(f.cls) + "/" + zone_name(f.zone) + "/" + band_name(f.band));
  }
  for (const auto& s : desc.signs) attrs.insert("sign:" + s.text);
  return {attrs.begin(), attrs.end()};
}

double attribute_jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t inter = 0;
  std::size_t i = 0, j = 0;  // both sorted
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++inter;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  const std::size_t uni = a.size() + b.size() - inter;
  return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

GoalDoorwaySimilarity::GoalDoorwaySimilarity(const WorldModel& world, const GoalSpec& goal,
                                             const Providers& providers) {
  const Room* room = world.room_by_label(goal.destination_text);
  if (!room) {
    // Fall back to substring match on labels (destination may be a suffix).
    for (const auto& r : world.rooms) {
      if (lower(r.label).find(lower(goal.destination_text)) != std::string::npos) {
        room = &r;
        break;
      }
    }
  }
  if (!room) throw UnreachableGoal("no room labeled: " + goal.destination_text);
  const SceneDescriptor goal_desc = build_scene_fresh(room->doorway, world, providers);
  goal_attrs_ = descriptor_attributes(goal_desc);
}

double GoalDoorwaySimilarity::similarity(const SceneDescriptor& current) {
  return attribute_jaccard(descriptor_attributes(current), goal_attrs_);
}

double scene_goal_similarity(const Pose& pose, const WorldModel& world, const GoalSpec& goal,
                             const Providers& providers, VirtualTime t) {
  GoalDoorwaySimilarity sim(world, goal, providers);
  return sim.similarity(build_scene_fresh(pose, world, providers, t));
}

double calibrate_threshold(const std::vector<ValidationSample>& validation,
                           const ConditionActionTable& table) {
  if (validation.empty()) throw EmptyValidation("calibrate_threshold: no validation samples");
  double best_threshold = 1.0;
  double best_precision = -1.0;
  for (int i = 100; i >= 0; --i) {
    const double threshold = static_cast<double>(i) / 100.0;
    int predicted = 0;
    int correct = 0;
    for (const auto& sample : validation) {
      MatchResult m;
      try {
        m = match_conditions(sample.desc, table, threshold);
      } catch (const EmptyText&) {
        continue;  // unmatchable sample; no prediction at any threshold
      }
      if (m.unique()) {
        ++predicted;
        if (sample.gt && *sample.gt == *m.action) ++correct;
      }
    }
    const double precision =
        predicted == 0 ? 1.0 : static_cast<double>(correct) / static_cast<double>(predicted);
    if (precision > best_precision) {
      best_precision = precision;
      best_threshold = threshold;
    }
  }
  return best_threshold;
}

}  // namespace dualnav
