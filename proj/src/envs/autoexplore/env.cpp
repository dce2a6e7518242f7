#include "textrl/envs/autoexplore/env.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "textrl/core/errors.hpp"
#include "textrl/mdp/enumerate.hpp"
#include "textrl/mdp/prompt_budget.hpp"

namespace textrl::envs {

namespace fs = std::filesystem;

AutoExploreEnv::AutoExploreEnv(AutoExploreConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.scratch_root.empty()) cfg_.scratch_root = default_scratch_root();
  if (!cfg_.queries || cfg_.queries->empty())
    throw ConfigError("autoexplore: no queries configured");
}

PromptView AutoExploreEnv::compile_prompt(const Sandbox& sb, const std::string& task,
                                          const std::vector<std::string>& history,
                                          const std::string& last_result,
                                          int prompt_budget) {
  PromptView view;
  view.task = task;
  std::string files;
  for (const auto& name : sb.list_cwd()) {
    files += name;
    files += '\n';
  }
  view.observation = "cwd " + sb.cwd() + "\n" + files;
  for (const auto& cmd : history) view.history.emplace_back(cmd, "");
  view.last_result = last_result;

  auto render = [&](int drop) {
    std::string text;
    text += "# Task\n" + task + "\n";
    text += "# Current working directory\n" + sb.cwd() + "\n";
    text += "# Files under current working directory\n" + files;
    text += "# Command history\n";
    for (std::size_t i = drop; i < history.size(); ++i) text += history[i] + "\n";
    text += "# Execution result of your last command\n";
    text += last_result;
    if (!last_result.empty() && last_result.back() != '\n') text += '\n';
    return text;
  };
  view.text = render_with_budget(prompt_budget, static_cast<int>(history.size()), render);
  return view;
}

std::vector<std::string> AutoExploreEnv::valid_actions() const {
  std::vector<std::string> actions{"exit"};
  if (sandbox_->cwd() != ".") actions.emplace_back("cd ..");
  std::vector<std::string> dirs, files;
  for (const auto& name : sandbox_->list_cwd()) {
    if (!name.empty() && name.back() == '/')
      dirs.push_back(name.substr(0, name.size() - 1));
    else
      files.push_back(name);
  }
  for (const auto& d : dirs) actions.push_back("cd " + d);
  for (const auto& f : files) actions.push_back("cat " + f);
  for (const auto& f : files) actions.push_back("id " + f);
  return actions;
}

void AutoExploreEnv::refresh_view() {
  prompt_ = compile_prompt(*sandbox_, query_.question, command_history_, last_result_,
                           cfg_.prompt_budget);
  if (episode_.done) {
    actions_ = EnumeratedActions{};
  } else {
    const auto acts = valid_actions();
    actions_ = enumerate_actions(acts);
  }
}

StepResult AutoExploreEnv::reset(std::uint64_t seed) {
  query_ = (*cfg_.queries)[seed % cfg_.queries->size()];
  sandbox_ = std::make_unique<Sandbox>(cfg_.repo_root, cfg_.scratch_root);
  command_history_.clear();
  last_result_.clear();
  episode_ = EpisodeState{};
  refresh_view();
  return {prompt_, actions_, 0.0, false};
}

StepResult AutoExploreEnv::step(const std::string& label) {
  if (episode_.done) throw EpisodeError("autoexplore: step on a done episode");
  const int idx = actions_.index_of_label(label);
  if (idx < 0) throw EpisodeError("autoexplore: label not in current action set: " + label);
  const std::string action = actions_.actions[idx];

  double reward = cfg_.step_cost;
  episode_.step_index += 1;

  if (action == "exit") {
    episode_.done = true;
    episode_.success = false;
    reward += cfg_.failure_penalty;
    last_result_.clear();
  } else {
    CommandResult result = sandbox_->exec(action);
    if (result.identified_file) {
      episode_.done = true;
      episode_.success = (*result.identified_file == query_.file);
      reward += episode_.success ? cfg_.success_bonus : cfg_.failure_penalty;
    }
    last_result_ = result.ok() ? result.out : result.err;
  }
  command_history_.push_back(action);

  if (!episode_.done && episode_.step_index >= cfg_.horizon) {
    episode_.done = true;
    episode_.success = false;
    reward += cfg_.failure_penalty;
  }
  episode_.reward_so_far += reward;
  refresh_view();
  return {prompt_, actions_, reward, episode_.done};
}

PromptView AutoExploreEnv::render_prompt() const { return prompt_; }

std::unique_ptr<TextEnv> AutoExploreEnv::clone() const {
  auto copy = std::make_unique<AutoExploreEnv>(cfg_);
  if (sandbox_) copy->sandbox_ = sandbox_->clone(cfg_.scratch_root);
  copy->query_ = query_;
  copy->command_history_ = command_history_;
  copy->last_result_ = last_result_;
  copy->episode_ = episode_;
  copy->actions_ = actions_;
  copy->prompt_ = prompt_;
  return copy;
}

std::string AutoExploreEnv::optimal_move_from(const std::string& cwd) const {
  // BFS from cwd over {cd child, cd ..} until the target directory.
  fs::path target_dir = fs::path(query_.file).parent_path();
  std::string target = target_dir.generic_string();
  if (target.empty()) target = ".";
  if (cwd == target) return "id " + fs::path(query_.file).filename().string();

  std::map<std::string, std::string> first_move;
  std::deque<std::string> frontier{cwd};
  first_move[cwd] = "";
  while (!frontier.empty()) {
    const std::string cur = frontier.front();
    frontier.pop_front();
    std::vector<std::pair<std::string, std::string>> moves;  // (next, command)
    for (const auto& entry : fs::directory_iterator(sandbox_->root() / cur)) {
      if (!entry.is_directory()) continue;
      const std::string child = entry.path().filename().string();
      fs::path next = (fs::path(cur) / child).lexically_normal();
      moves.emplace_back(next.generic_string(), "cd " + child);
    }
    if (cur != ".") {
      fs::path up = fs::path(cur).parent_path();
      std::string key = up.generic_string();
      if (key.empty()) key = ".";
      moves.emplace_back(key, "cd ..");
    }
    std::sort(moves.begin(), moves.end());
    for (auto& [next, cmd] : moves) {
      if (first_move.count(next)) continue;
      first_move[next] = first_move[cur].empty() ? cmd : first_move[cur];
      if (next == target) return first_move[next];
      frontier.push_back(next);
    }
  }
  return "exit";  // unreachable target: should not happen on generated repos
}

std::optional<std::string> AutoExploreEnv::optimal_action() const {
  if (!sandbox_ || episode_.done) return std::nullopt;
  return optimal_move_from(sandbox_->cwd());
}

std::string AutoExploreEnv::situation_text() const {
  if (!sandbox_) return {};
  const std::string move = optimal_move_from(sandbox_->cwd());
  const std::string fname = fs::path(query_.file).filename().string();
  if (move.rfind("id ", 0) == 0)
    return "The file " + fname + " in the current directory matches the question.";
  if (move == "cd ..")
    return "The answer is not under this folder, so we should go back up.";
  if (move.rfind("cd ", 0) == 0)
    return "The answer lies deeper, under the folder " + move.substr(3) + ".";
  return "No further progress is possible.";
}

std::string AutoExploreEnv::negative_reason(const std::string& last_action) const {
  return "The last command " + last_action +
         " opens a wrong folder or file because the answer is not there.";
}

}  // namespace textrl::envs
