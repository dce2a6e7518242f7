#pragma once

#include <functional>
#include <string>

namespace textrl {

// Renders a prompt under a token budget by dropping the oldest history
// entries first. `render(drop)` must produce the prompt with the first
// `drop` history entries omitted. If even the history-free prompt is over
// budget, the text is cut at a piece boundary from the end.
std::string render_with_budget(int budget_tokens, int history_len,
                               const std::function<std::string(int)>& render);

}  // namespace textrl
