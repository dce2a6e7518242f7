#include <numeric>
#include <stdexcept>

#include "textrl/core/errors.hpp"
#include "textrl/core/text.hpp"
#include "textrl/mdp/cost.hpp"
#include "textrl/mdp/enumerate.hpp"
#include "textrl/mdp/prompt_budget.hpp"
#include "textrl/mdp/types.hpp"

namespace textrl {

const std::vector<std::string>& default_label_pool() {
  static const std::vector<std::string> pool = [] {
    std::vector<std::string> p;
    for (char c = '0'; c <= '9'; ++c) p.emplace_back(1, c);
    for (char c = 'a'; c <= 'z'; ++c) p.emplace_back(1, c);
    for (char c = 'A'; c <= 'Z'; ++c) p.emplace_back(1, c);
    for (int i = 100; i <= 199; ++i) p.push_back(std::to_string(i));
    return p;
  }();
  return pool;
}

EnumeratedActions enumerate_actions(std::span<const std::string> actions,
                                    std::span<const std::string> label_pool) {
  if (actions.empty()) throw std::invalid_argument("enumerate_actions: empty action list");
  if (actions.size() > label_pool.size()) {
    throw LabelPoolExhausted("enumerate_actions: " + std::to_string(actions.size()) +
                             " actions exceed a pool of " +
                             std::to_string(label_pool.size()) + " labels");
  }
  EnumeratedActions out;
  out.actions.assign(actions.begin(), actions.end());
  out.labels.assign(label_pool.begin(), label_pool.begin() + actions.size());
  for (std::size_t i = 0; i < actions.size(); ++i) {
    out.rendered += out.labels[i];
    out.rendered += ". ";
    out.rendered += actions[i];
    out.rendered += '\n';
  }
  return out;
}

std::vector<double> suffix_returns(std::span<const double> rewards) {
  if (rewards.empty()) throw std::invalid_argument("suffix_returns: empty trajectory");
  std::vector<double> returns(rewards.size());
  double acc = 0.0;
  for (int h = static_cast<int>(rewards.size()) - 1; h >= 0; --h) {
    acc += rewards[h];
    returns[h] = acc;
  }
  return returns;
}

std::vector<double> compute_returns(const Trajectory& traj) {
  std::vector<double> rewards;
  rewards.reserve(traj.steps.size());
  for (const auto& s : traj.steps) rewards.push_back(s.reward);
  return suffix_returns(rewards);
}

TokenCosts token_cost_model(std::int64_t prompt_len,
                            std::span<const int> action_lens) {
  if (action_lens.empty()) throw std::invalid_argument("token_cost_model: no actions");
  TokenCosts costs;
  std::int64_t total_action = 0;
  for (int len : action_lens) {
    total_action += len;
    const std::int64_t per = prompt_len + len;
    costs.normalization += per * per;
  }
  const std::int64_t joint = prompt_len + total_action;
  costs.single_prompt = joint * joint;
  return costs;
}

std::string render_with_budget(int budget_tokens, int history_len,
                               const std::function<std::string(int)>& render) {
  for (int drop = 0; drop <= history_len; ++drop) {
    std::string text = render(drop);
    if (piece_count(text) <= budget_tokens) return text;
    if (drop == history_len) {
      // History exhausted: cut whole pieces from the end.
      auto pieces = split_pieces(text);
      std::string cut;
      for (int i = 0; i < budget_tokens && i < static_cast<int>(pieces.size()); ++i)
        cut += pieces[i];
      return cut;
    }
  }
  return render(history_len);
}

}  // namespace textrl
