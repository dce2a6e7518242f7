#pragma once

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "textrl/mdp/env.hpp"

namespace textrl::envs {

enum class TaxiStage { kPickup, kDropoff };

struct TaxiConfig {
  int grid_size = 5;
  TaxiStage stage = TaxiStage::kPickup;
  int horizon = 15;               // 30 is the usual dropoff setting
  bool classic_walls = true;      // interior walls on the 5x5 grid
  double step_cost = -1.0;
  double invalid_penalty = -15.0;
  double pickup_bonus = 20.0;
  double dropoff_bonus = 20.0;
  double timeout_penalty = 0.0;   // charged when the horizon expires
  int prompt_budget = 1024;
  int history_max = 6;
};

struct Landmark {
  std::string name;  // "R", "G", "Y", "B"
  int row = 0;
  int col = 0;
};

// Gridworld taxi that ends the episode on any invalid action: driving into
// a wall or boundary, picking up away from the passenger, or dropping off
// at the wrong place. In the pickup stage a correct pickup ends the episode
// with +20; in the dropoff stage the pickup bonus is retained mid-episode
// and a correct dropoff ends it.
class TaxiEnv : public TextEnv {
 public:
  explicit TaxiEnv(TaxiConfig cfg);

  std::string name() const override { return "taxi"; }
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

  const std::vector<Landmark>& landmarks() const { return landmarks_; }
  std::pair<int, int> taxi_pos() const { return {taxi_row_, taxi_col_}; }
  bool passenger_in_taxi() const { return passenger_in_taxi_; }
  int passenger_landmark() const { return passenger_; }
  int destination_landmark() const { return destination_; }

  // Number of distinct initial configurations; reset(seed) enumerates them
  // round-robin, so seeds 0..n-1 cover every start exactly once.
  int initial_state_count() const;

 private:
  bool blocked(int r, int c, int nr, int nc) const;
  void refresh_view();
  std::string apply_action(const std::string& action, double& reward);

  TaxiConfig cfg_;
  std::vector<Landmark> landmarks_;
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> walls_;

  int taxi_row_ = 0, taxi_col_ = 0;
  int passenger_ = 0;    // landmark index when waiting
  int destination_ = 1;  // landmark index
  bool passenger_in_taxi_ = false;

  std::vector<std::pair<std::string, std::string>> history_;
  EpisodeState episode_;
  EnumeratedActions actions_;
  PromptView prompt_;
};

}  // namespace textrl::envs
