#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace textrl {

// Shared pre-tokenization: text is split into "pieces" whose concatenation
// reproduces the input byte-for-byte. A piece is an optional single leading
// space followed by either a run of word characters or one symbol
// character; newlines, tabs and surplus spaces stand alone. The vocabulary
// assigns one token per known piece, so piece count is also the
// vocabulary-independent token-length measure used for prompt budgets.

inline bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

inline std::vector<std::string> split_pieces(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto word_end = [&](std::size_t start) {
    std::size_t j = start;
    while (j < n && is_word_char(text[j])) ++j;
    return j;
  };
  while (i < n) {
    const char c = text[i];
    if (c == '\n' || c == '\t') {
      out.emplace_back(1, c);
      ++i;
    } else if (c == ' ') {
      if (i + 1 < n && text[i + 1] != ' ' && text[i + 1] != '\n' &&
          text[i + 1] != '\t') {
        const std::size_t start = i++;
        const std::size_t end = is_word_char(text[i]) ? word_end(i) : i + 1;
        out.emplace_back(text.substr(start, end - start));
        i = end;
      } else {
        out.emplace_back(" ");
        ++i;
      }
    } else if (is_word_char(c)) {
      const std::size_t end = word_end(i);
      out.emplace_back(text.substr(i, end - i));
      i = end;
    } else {
      out.emplace_back(1, c);
      ++i;
    }
  }
  return out;
}

inline int piece_count(std::string_view text) {
  return static_cast<int>(split_pieces(text).size());
}

// Whitespace-delimited word count, used for reflection word budgets.
inline int word_count(std::string_view text) {
  int count = 0;
  bool in_word = false;
  for (char c : text) {
    const bool ws = (c == ' ' || c == '\n' || c == '\t' || c == '\r');
    if (!ws && !in_word) ++count;
    in_word = !ws;
  }
  return count;
}

// Keep at most `budget` whitespace-delimited words.
inline std::string truncate_words(std::string_view text, int budget) {
  int count = 0;
  bool in_word = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    const bool ws = (c == ' ' || c == '\n' || c == '\t' || c == '\r');
    if (!ws && !in_word) {
      ++count;
      if (count > budget) return std::string(text.substr(0, i));
    }
    in_word = !ws;
  }
  return std::string(text);
}

}  // namespace textrl
