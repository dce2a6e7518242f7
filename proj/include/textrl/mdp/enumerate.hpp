#pragma once

#include <span>
#include <string>
#include <vector>

#include "textrl/mdp/types.hpp"

namespace textrl {

// The fixed ordered pool of single-token choice labels, built once and
// reserved atomically in every vocabulary: digits, lowercase, uppercase,
// then the multi-digit symbols "100".."199". 162 entries.
const std::vector<std::string>& default_label_pool();

// Assigns labels to actions in pool order and renders one "label. action"
// line per action. Throws LabelPoolExhausted when there are more actions
// than labels.
EnumeratedActions enumerate_actions(std::span<const std::string> actions,
                                    std::span<const std::string> label_pool);

inline EnumeratedActions enumerate_actions(std::span<const std::string> actions) {
  const auto& pool = default_label_pool();
  return enumerate_actions(actions, std::span<const std::string>(pool));
}

}  // namespace textrl
