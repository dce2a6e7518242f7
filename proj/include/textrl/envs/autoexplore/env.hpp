#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "textrl/envs/autoexplore/repo.hpp"
#include "textrl/envs/autoexplore/sandbox.hpp"
#include "textrl/mdp/env.hpp"

namespace textrl::envs {

struct AutoExploreConfig {
  std::filesystem::path repo_root;
  std::filesystem::path scratch_root;  // empty -> default_scratch_root()
  std::shared_ptr<const std::vector<QueryLabel>> queries;
  int horizon = 15;
  double step_cost = -1.0;
  double success_bonus = 15.0;
  double failure_penalty = -15.0;
  int prompt_budget = 1024;
};

// File-identification episodes against a sandboxed repository copy. Each
// step costs -1; identifying the right file ends the episode with +15,
// while a wrong `id`, an explicit exit, or horizon expiry ends it with -15.
class AutoExploreEnv : public TextEnv {
 public:
  explicit AutoExploreEnv(AutoExploreConfig cfg);

  std::string name() const override { return "autoexplore"; }
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

  const QueryLabel& query() const { return query_; }
  const Sandbox& sandbox() const { return *sandbox_; }

  // Build a copilot prompt from sandbox state: task, cwd, files under cwd,
  // command history, and the last execution result, in that order.
  static PromptView compile_prompt(const Sandbox& sb, const std::string& task,
                                   const std::vector<std::string>& history,
                                   const std::string& last_result,
                                   int prompt_budget);

 private:
  void refresh_view();
  std::vector<std::string> valid_actions() const;
  // Distance map over directories toward the target directory.
  std::string optimal_move_from(const std::string& cwd) const;

  AutoExploreConfig cfg_;
  std::unique_ptr<Sandbox> sandbox_;
  QueryLabel query_;
  std::vector<std::string> command_history_;
  std::string last_result_;
  EpisodeState episode_;
  EnumeratedActions actions_;
  PromptView prompt_;
};

}  // namespace textrl::envs
