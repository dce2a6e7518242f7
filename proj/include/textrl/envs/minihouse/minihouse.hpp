#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "textrl/mdp/env.hpp"

namespace textrl::envs {

struct MiniHouseConfig {
  int min_receptacles = 10;
  int max_receptacles = 25;
  int min_objects = 5;
  int max_objects = 10;
  int horizon = 15;
  double step_cost = -1.0;
  double success_bonus = 15.0;
  int prompt_budget = 1024;
  int history_max = 8;
  // When > 0, reset(seed) draws the layout from seed % layout_count so a
  // fixed task set can be enumerated for evaluation.
  std::uint64_t layout_count = 0;
};

struct Receptacle {
  std::string name;   // e.g. "cabinet 3"
  bool openable = false;
  bool open = false;
  int loc = 0;        // arrival location index used in observations
};

// Household pick-and-place episodes in the style of text-home benchmarks:
// rooms full of receptacles, a task "put a <object> in <receptacle>", and a
// state-dependent action set (go to / open / close / take / put) that is
// typically 20-50 entries long.
class MiniHouseEnv : public TextEnv {
 public:
  explicit MiniHouseEnv(MiniHouseConfig cfg);

  std::string name() const override { return "minihouse"; }
  int horizon() const override { return cfg_.horizon; }
  StepResult reset(std::uint64_t seed) override;
  StepResult step(const std::string& label) override;
  const EpisodeState& episode() const override { return episode_; }
  const EnumeratedActions& current_actions() const override { return actions_; }
  PromptView render_prompt() const override;
  std::unique_ptr<TextEnv> clone() const override;

  std::optional<std::string> optimal_action() const override;
  std::string situation_text() const override;
  std::string negative_reason(const std::string& last_action) const override;

  // Applicable actions at the current state, sorted lexicographically.
  std::vector<std::string> applicable_actions() const;

  const std::vector<Receptacle>& receptacles() const { return receptacles_; }
  const std::string& task_object_type() const { return task_object_; }
  const std::string& task_receptacle() const { return task_receptacle_; }
  // Multiset of object instances across receptacles and the hand.
  std::vector<std::string> object_multiset() const;

 private:
  int receptacle_index(const std::string& name) const;
  bool contents_visible(const Receptacle& r) const { return !r.openable || r.open; }
  std::string contents_phrase(int idx) const;
  std::string apply(const std::string& action);
  bool task_done() const;
  void refresh_view();

  MiniHouseConfig cfg_;

  std::vector<Receptacle> receptacles_;
  std::map<int, std::vector<std::string>> contents_;  // receptacle -> objects
  int agent_at_ = -1;                                 // -1: middle of the room
  std::optional<std::string> holding_;
  std::string task_object_;      // object type, e.g. "tomato"
  std::string task_receptacle_;  // full receptacle name, e.g. "microwave 1"
  std::string initial_observation_;

  std::vector<std::pair<std::string, std::string>> history_;
  EpisodeState episode_;
  EnumeratedActions actions_;
  PromptView prompt_;
};

}  // namespace textrl::envs
