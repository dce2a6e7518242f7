#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "textrl/mdp/types.hpp"

namespace textrl {

struct StepResult {
  PromptView prompt;
  EnumeratedActions actions;  // empty once done
  double reward = 0.0;
  bool done = false;
};

// Finite-horizon deterministic MDP with textual observations and a
// state-dependent enumerated action set. Instances are single-owner; run
// parallel episodes by creating independent instances (or clones).
class TextEnv {
 public:
  virtual ~TextEnv() = default;

  virtual std::string name() const = 0;
  virtual int horizon() const = 0;

  // Same (env, seed) always reproduces the identical initial state.
  virtual StepResult reset(std::uint64_t seed) = 0;

  // Advances the episode by the action mapped from `label`. Throws
  // EpisodeError when the episode is done or the label is not in the
  // current enumeration (masking upstream must prevent both).
  virtual StepResult step(const std::string& label) = 0;

  virtual const EpisodeState& episode() const = 0;
  virtual const EnumeratedActions& current_actions() const = 0;
  virtual PromptView render_prompt() const = 0;

  // Deep copy, including the in-flight episode. Used to restore earlier
  // states during negative-example generation.
  virtual std::unique_ptr<TextEnv> clone() const = 0;

  // --- Data-generation-only oracle surface -------------------------------
  // Ground-truth hints for the scripted reflection oracle and the optimal
  // actor. Environments that cannot provide them return nullopt.
  virtual std::optional<std::string> optimal_action() const { return std::nullopt; }
  virtual std::string situation_text() const { return {}; }
  virtual std::string negative_reason(const std::string& last_action) const {
    return "The last action " + last_action +
           " was a wrong move because it does not lead toward the goal.";
  }
};

// Convenience wrapper matching the reset-by-identifier surface used by the
// harness. Factory construction lives in textrl/envs/registry.hpp.
inline StepResult reset_env(TextEnv& env, std::uint64_t seed) { return env.reset(seed); }

}  // namespace textrl
