#pragma once

#include <cstdint>
#include <span>

namespace textrl {

// Token cost of scoring one state's action set with a quadratic-attention
// model. Listing every action inside a single prompt costs
// (|s| + sum_a |a|)^2; scoring each action separately and normalizing
// costs sum_a (|s| + |a|)^2.
struct TokenCosts {
  std::int64_t single_prompt = 0;
  std::int64_t normalization = 0;
};

TokenCosts token_cost_model(std::int64_t prompt_len,
                            std::span<const int> action_lens);

}  // namespace textrl
