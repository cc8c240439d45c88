#include "dualnav/scripted_backend.hpp"

#include <algorithm>
#include <map>

#include "dualnav/errors.hpp"
#include "dualnav/scene.hpp"

namespace dualnav {

namespace {

constexpr int kMinRules = 6;
constexpr int kMaxRules = 9;

Action wrong_action(const Action& gt, Rng& rng) {
  std::vector<Action> candidates{Action::forward(), Action::cw(90), Action::ccw(90),
                                 Action::turn_back()};
  candidates.erase(std::remove(candidates.begin(), candidates.end(), gt), candidates.end());
  return candidates[static_cast<std::size_t>(
      rng.uniform_int(0, static_cast<std::int64_t>(candidates.size()) - 1))];
}

const char* kFillerWords[] = {"the",      "corridor", "layout",  "suggests", "checking",
                              "visible",  "structure", "and",    "signage",  "before",
                              "deciding", "carefully", "towards", "goal",    "route"};

class ThinkingSession : public GenerationSession {
 public:
  ThinkingSession(Action action, std::vector<std::string> words, int natural_len)
      : action_(action), words_(std::move(words)), natural_len_(natural_len) {}

  std::optional<std::string> next_token(const StepControl& ctrl) override {
    if (done_) return std::nullopt;
    if (ctrl.forced || ctrl.nonaction_bias >= 5.0 || pos_ >= natural_len_) {
      done_ = true;
      return action_render(action_);
    }
    const std::string tok = words_[static_cast<std::size_t>(pos_) % words_.size()];
    ++pos_;
    return tok;
  }

  std::uint64_t save_checkpoint() override { return static_cast<std::uint64_t>(pos_); }

  void restore_checkpoint(std::uint64_t handle) override {
    pos_ = static_cast<int>(handle);
    done_ = false;
  }

 private:
  Action action_;
  std::vector<std::string> words_;
  int natural_len_;
  int pos_ = 0;
  bool done_ = false;
};

class TableSession : public GenerationSession {
 public:
  explicit TableSession(std::string json) : json_(std::move(json)) {}

  std::optional<std::string> next_token(const StepControl&) override {
    if (emitted_) return std::nullopt;
    emitted_ = true;
    return json_;
  }
  std::uint64_t save_checkpoint() override { return emitted_ ? 1 : 0; }
  void restore_checkpoint(std::uint64_t handle) override { emitted_ = handle != 0; }

 private:
  std::string json_;
  bool emitted_ = false;
};

}  // namespace

ConditionActionTable synthesize_table(const WorldModel& world, const Pose& start,
                                      const GoalSpec& goal, const Providers& providers) {
  const auto waypoints = gt_labels(world, start, goal, 0.5);

  // Distinct rendered descriptors along the route with their label sets.
  struct Entry {
    std::map<Action, int> actions;
    int count = 0;
    int first_seen = 0;
  };
  std::map<std::string, Entry> by_text;
  int order = 0;
  for (const auto& wp : waypoints) {
    if (wp.action == Action::idle()) continue;
    SceneDescriptor desc;
    try {
      desc = build_scene_fresh(wp.pose, world, providers);
    } catch (const Error&) {
      continue;
    }
    const std::string text = desc.joined_text();
    if (text.empty()) continue;
    auto [it, inserted] = by_text.try_emplace(text);
    if (inserted) it->second.first_seen = order++;
    it->second.actions[wp.action] += 1;
    it->second.count += 1;
  }

  // A text that ever appears with two different labels cannot be a safe
  // reflex rule; those scenes must escalate instead.
  struct Candidate {
    std::string text;
    Action action;
    int count;
    int first_seen;
  };
  std::vector<Candidate> candidates;
  for (const auto& [text, entry] : by_text) {
    if (entry.actions.size() != 1) continue;
    candidates.push_back({text, entry.actions.begin()->first, entry.count, entry.first_seen});
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.first_seen < b.first_seen;
  });

  std::vector<ConditionRule> rules;
  for (const auto& c : candidates) {
    if (static_cast<int>(rules.size()) >= kMaxRules) break;
    rules.push_back({c.text, c.action});
  }
  for (int k = 1; static_cast<int>(rules.size()) < kMinRules; ++k) {
    rules.push_back({"route memo " + std::to_string(k) +
                         ": keep following the corridor toward the destination",
                     Action::forward()});
  }
  return ConditionActionTable(goal, std::move(rules));
}

ScriptedBackend::ScriptedBackend(const WorldModel& world, Providers providers,
                                 ScriptedBackendOptions opts)
    : world_(world), providers_(std::move(providers)), opts_(opts) {
  if (!(opts_.accuracy_preset >= 0.0 && opts_.accuracy_preset <= 1.0)) {
    throw RangeError("accuracy_preset", "must be in [0, 1]");
  }
}

void ScriptedBackend::register_frame(std::uint64_t frame_id, const Pose& pose) {
  frames_[frame_id] = pose;
}

std::unique_ptr<GenerationSession> ScriptedBackend::begin(const ReasonerRequest& req) {
  if (req.mode == ReasonMode::kTableGen) {
    Pose start = world_.start;
    if (auto it = frames_.find(req.frame_id); it != frames_.end()) start = it->second;
    const ConditionActionTable table = synthesize_table(world_, start, req.goal, providers_);
    return std::make_unique<TableSession>(table.to_json_text());
  }

  auto it = frames_.find(req.frame_id);
  if (it == frames_.end()) {
    throw ReasonerUnavailable("scripted backend: unregistered frame id " +
                              std::to_string(req.frame_id));
  }
  const Pose& pose = it->second;
  const Action gt = oracle_label_at(world_, pose, req.goal);

  Rng rng(hash_combine(hash_combine(opts_.seed, req.frame_id), 0x646563696465ull /*decide*/));
  const Action emitted = rng.uniform01() < opts_.accuracy_preset ? gt : wrong_action(gt, rng);

  // Reasoning verbosity is planned without budget knowledge; the decode
  // bias is what reins the stream in, mirroring the real decoding setup.
  const int natural_len = 200 + static_cast<int>(rng.uniform_int(0, 80));

  std::vector<std::string> words;
  words.reserve(64);
  words.emplace_back("observing");
  for (const auto& line : req.augmentation) {
    for (const auto& sentence : tokenize_sentences(line)) {
      for (const auto& tok : sentence) words.push_back(tok);
    }
  }
  for (const char* w : kFillerWords) words.emplace_back(w);
  return std::make_unique<ThinkingSession>(emitted, std::move(words), natural_len);
}

}  // namespace dualnav
