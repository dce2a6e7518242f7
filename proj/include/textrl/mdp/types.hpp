#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace textrl {

// Episode bookkeeping shared by every environment. The environment-specific
// world state lives inside the environment instance itself.
struct EpisodeState {
  int step_index = 0;       // steps taken so far (h)
  bool done = false;
  bool success = false;     // meaningful only once done
  double reward_so_far = 0.0;
};

// The rendered text p(s): structured fields plus the final prompt string.
// Rendering is injective over reachable states and is truncated (oldest
// history first) to stay within the configured token budget.
struct PromptView {
  std::string task;
  std::string observation;
  std::vector<std::pair<std::string, std::string>> history;  // (action, observation)
  std::string last_result;
  std::string text;  // full rendered prompt
};

// An ordered list of valid actions paired with single-token choice labels,
// rendered as one "label. action" line per action.
struct EnumeratedActions {
  std::vector<std::string> actions;
  std::vector<std::string> labels;
  std::string rendered;

  bool empty() const { return actions.empty(); }
  int size() const { return static_cast<int>(actions.size()); }
  int index_of_label(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == label) return static_cast<int>(i);
    return -1;
  }
};

struct TrajectoryStep {
  PromptView prompt;
  std::string reflection;
  EnumeratedActions enumerated;
  std::string chosen_label;
  std::string action_text;
  double reward = 0.0;
  double log_prob = 0.0;
};

struct Trajectory {
  std::vector<TrajectoryStep> steps;
  double total_return = 0.0;
  bool success = false;
};

// Undiscounted Monte-Carlo suffix sums: returns[h] = sum_{t>=h} reward[t].
std::vector<double> compute_returns(const Trajectory& traj);
std::vector<double> suffix_returns(std::span<const double> rewards);

}  // namespace textrl
