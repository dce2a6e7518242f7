#include "textrl/envs/taxi/taxi.hpp"

#include <algorithm>
#include <deque>

#include "textrl/core/errors.hpp"
#include "textrl/mdp/enumerate.hpp"
#include "textrl/mdp/prompt_budget.hpp"

namespace textrl::envs {

namespace {

const std::vector<std::string>& taxi_actions() {
  static const std::vector<std::string> kActions{"north", "south", "east",
                                                 "west",  "pickup", "dropoff"};
  return kActions;
}

constexpr int kMoves[4][2] = {{-1, 0}, {1, 0}, {0, 1}, {0, -1}};  // N S E W

}  // namespace

TaxiEnv::TaxiEnv(TaxiConfig cfg) : cfg_(std::move(cfg)) {
  const int n = cfg_.grid_size;
  if (n < 2) throw ConfigError("taxi: grid_size must be at least 2");
  if (n >= 4) {
    landmarks_ = {{"R", 0, 0}, {"G", 0, n - 1}, {"Y", n - 1, 0}, {"B", n - 1, n - 2}};
  } else {
    landmarks_ = {{"R", 0, 0}, {"B", n - 1, n - 1}};
  }
  if (n == 5 && cfg_.classic_walls) {
    auto add_wall = [&](int r, int c1, int c2) {
      walls_.insert({{r, std::min(c1, c2)}, {r, std::max(c1, c2)}});
    };
    add_wall(0, 1, 2);
    add_wall(1, 1, 2);
    add_wall(3, 0, 1);
    add_wall(4, 0, 1);
    add_wall(3, 2, 3);
    add_wall(4, 2, 3);
  }
}

int TaxiEnv::initial_state_count() const {
  const int cells = cfg_.grid_size * cfg_.grid_size;
  const int pairs = static_cast<int>(landmarks_.size()) *
                    (static_cast<int>(landmarks_.size()) - 1);
  return cells * pairs;
}

bool TaxiEnv::blocked(int r, int c, int nr, int nc) const {
  if (nr < 0 || nr >= cfg_.grid_size || nc < 0 || nc >= cfg_.grid_size) return true;
  if (r == nr) {
    // Horizontal move: interior walls sit between column neighbours.
    auto key = std::make_pair(std::make_pair(r, std::min(c, nc)),
                              std::make_pair(r, std::max(c, nc)));
    if (walls_.count(key)) return true;
  }
  return false;
}

StepResult TaxiEnv::reset(std::uint64_t seed) {
  const int cells = cfg_.grid_size * cfg_.grid_size;
  const int num_l = static_cast<int>(landmarks_.size());
  const int pairs = num_l * (num_l - 1);
  const std::uint64_t combo = seed % static_cast<std::uint64_t>(cells * pairs);
  const int cell = static_cast<int>(combo % cells);
  int pair_idx = static_cast<int>(combo / cells);
  taxi_row_ = cell / cfg_.grid_size;
  taxi_col_ = cell % cfg_.grid_size;
  passenger_ = pair_idx / (num_l - 1);
  int d = pair_idx % (num_l - 1);
  destination_ = d >= passenger_ ? d + 1 : d;
  passenger_in_taxi_ = false;

  history_.clear();
  episode_ = EpisodeState{};
  refresh_view();
  return {prompt_, actions_, 0.0, false};
}

std::string TaxiEnv::apply_action(const std::string& action, double& reward) {
  reward = cfg_.step_cost;
  for (int dir = 0; dir < 4; ++dir) {
    if (action != taxi_actions()[dir]) continue;
    const int nr = taxi_row_ + kMoves[dir][0];
    const int nc = taxi_col_ + kMoves[dir][1];
    if (blocked(taxi_row_, taxi_col_, nr, nc)) {
      episode_.done = true;
      episode_.success = false;
      reward += cfg_.invalid_penalty;
      return "crashed into a wall";
    }
    taxi_row_ = nr;
    taxi_col_ = nc;
    return "moved to row " + std::to_string(nr) + ", col " + std::to_string(nc);
  }
  if (action == "pickup") {
    const auto& lm = landmarks_[passenger_];
    if (!passenger_in_taxi_ && taxi_row_ == lm.row && taxi_col_ == lm.col) {
      reward += cfg_.pickup_bonus;
      if (cfg_.stage == TaxiStage::kPickup) {
        episode_.done = true;
        episode_.success = true;
        return "picked up the passenger";
      }
      passenger_in_taxi_ = true;
      return "picked up the passenger";
    }
    episode_.done = true;
    episode_.success = false;
    reward += cfg_.invalid_penalty;
    return "invalid pickup";
  }
  if (action == "dropoff") {
    const auto& lm = landmarks_[destination_];
    if (passenger_in_taxi_ && taxi_row_ == lm.row && taxi_col_ == lm.col) {
      reward += cfg_.dropoff_bonus;
      episode_.done = true;
      episode_.success = true;
      return "dropped off the passenger at " + lm.name;
    }
    episode_.done = true;
    episode_.success = false;
    reward += cfg_.invalid_penalty;
    return "invalid dropoff";
  }
  throw EpisodeError("taxi: unknown action " + action);
}

StepResult TaxiEnv::step(const std::string& label) {
  if (episode_.done) throw EpisodeError("taxi: step on a done episode");
  const int idx = actions_.index_of_label(label);
  if (idx < 0) throw EpisodeError("taxi: label not in current action set: " + label);
  const std::string action = actions_.actions[idx];

  episode_.step_index += 1;
  double reward = 0.0;
  const std::string obs = apply_action(action, reward);
  history_.emplace_back(action, obs);

  if (!episode_.done && episode_.step_index >= cfg_.horizon) {
    episode_.done = true;
    episode_.success = false;
    reward += cfg_.timeout_penalty;
  }
  episode_.reward_so_far += reward;
  refresh_view();
  return {prompt_, actions_, reward, episode_.done};
}

void TaxiEnv::refresh_view() {
  PromptView view;
  view.task = cfg_.stage == TaxiStage::kPickup
                  ? "Drive the taxi to the passenger and pick them up."
                  : "Drive the taxi to the passenger, pick them up, and drop "
                    "them off at the destination.";

  std::string grid;
  for (int r = 0; r < cfg_.grid_size; ++r) {
    for (int c = 0; c < cfg_.grid_size; ++c) {
      if (c) grid += ' ';
      char cell = '.';
      for (const auto& lm : landmarks_)
        if (lm.row == r && lm.col == c) cell = lm.name[0];
      if (r == taxi_row_ && c == taxi_col_) cell = 'T';
      grid += cell;
    }
    grid += '\n';
  }

  std::string status = "Taxi at row " + std::to_string(taxi_row_) + ", col " +
                       std::to_string(taxi_col_) + ". ";
  if (passenger_in_taxi_) {
    status += "The passenger is in the taxi. ";
  } else {
    const auto& p = landmarks_[passenger_];
    status += "Passenger waiting at " + p.name + ", row " + std::to_string(p.row) +
              ", col " + std::to_string(p.col) + ". ";
  }
  const auto& dst = landmarks_[destination_];
  status += "Destination " + dst.name + ", row " + std::to_string(dst.row) +
            ", col " + std::to_string(dst.col) + ".";

  view.observation = status;
  view.history = history_;
  if (!history_.empty()) view.last_result = history_.back().second;

  const int start = std::max(0, static_cast<int>(history_.size()) - cfg_.history_max);
  auto render = [&](int drop) {
    std::string text;
    text += "# Task\n" + view.task + "\n";
    text += "# Grid\n" + grid;
    text += "# Status\n" + status + "\n";
    text += "# History\n";
    for (std::size_t i = static_cast<std::size_t>(start + drop); i < history_.size(); ++i)
      text += history_[i].first + " -> " + history_[i].second + "\n";
    return text;
  };
  view.text = render_with_budget(cfg_.prompt_budget,
                                 static_cast<int>(history_.size()) - start, render);
  prompt_ = std::move(view);
  actions_ = episode_.done ? EnumeratedActions{} : enumerate_actions(taxi_actions());
}

PromptView TaxiEnv::render_prompt() const { return prompt_; }

std::unique_ptr<TextEnv> TaxiEnv::clone() const {
  return std::make_unique<TaxiEnv>(*this);
}

std::optional<std::string> TaxiEnv::optimal_action() const {
  if (episode_.done) return std::nullopt;
  const auto& goal = passenger_in_taxi_ ? landmarks_[destination_] : landmarks_[passenger_];
  if (taxi_row_ == goal.row && taxi_col_ == goal.col)
    return passenger_in_taxi_ ? std::string("dropoff") : std::string("pickup");

  // BFS over cells respecting walls; first move of a shortest path.
  const int n = cfg_.grid_size;
  std::vector<int> first(n * n, -1);
  std::deque<int> frontier{taxi_row_ * n + taxi_col_};
  std::vector<bool> seen(n * n, false);
  seen[frontier.front()] = true;
  while (!frontier.empty()) {
    const int cur = frontier.front();
    frontier.pop_front();
    const int r = cur / n, c = cur % n;
    for (int dir = 0; dir < 4; ++dir) {
      const int nr = r + kMoves[dir][0];
      const int nc = c + kMoves[dir][1];
      if (blocked(r, c, nr, nc)) continue;
      const int next = nr * n + nc;
      if (seen[next]) continue;
      seen[next] = true;
      first[next] = (first[cur] == -1) ? dir : first[cur];
      if (nr == goal.row && nc == goal.col) return taxi_actions()[first[next]];
      frontier.push_back(next);
    }
  }
  return std::nullopt;  // goal unreachable: malformed wall layout
}

std::string TaxiEnv::situation_text() const {
  if (passenger_in_taxi_) {
    const auto& d = landmarks_[destination_];
    return "The passenger is aboard and the destination is " + d.name + " at row " +
           std::to_string(d.row) + ", col " + std::to_string(d.col) + ".";
  }
  const auto& p = landmarks_[passenger_];
  return "The passenger waits at " + p.name + " at row " + std::to_string(p.row) +
         ", col " + std::to_string(p.col) + ".";
}

std::string TaxiEnv::negative_reason(const std::string& last_action) const {
  return "The last action " + last_action +
         " moved away from the goal and wasted a step.";
}

}  // namespace textrl::envs
