#pragma once

// Test-only reference routines. They work on raw '('/')' strings and bit
// masks and share no code with the library.

#include <bit>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace grandforest::testing {

// All balanced strings over {'U','D'} of length 2n, bit i set meaning 'D'.
inline std::vector<std::string> all_balanced_words(unsigned n) {
  std::vector<std::string> out;
  const unsigned len = 2 * n;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << len); ++mask) {
    if (static_cast<unsigned>(std::popcount(mask)) != n) continue;
    std::string w;
    for (unsigned i = 0; i < len; ++i) w.push_back((mask >> i) & 1U ? 'D' : 'U');
    out.push_back(w);
  }
  return out;
}

inline bool is_dyck_word(const std::string& w) {
  int level = 0;
  for (char c : w) {
    level += c == 'U' ? 1 : -1;
    if (level < 0) return false;
  }
  return level == 0;
}

inline std::vector<std::string> all_dyck_words(unsigned n) {
  std::vector<std::string> out;
  for (auto& w : all_balanced_words(n)) {
    if (is_dyck_word(w)) out.push_back(w);
  }
  return out;
}

// Sorted lexicographically with 'U' < 'D'.
inline std::vector<std::string> lex_sorted(std::vector<std::string> words) {
  std::set<std::string> s;
  for (auto& w : words) {
    for (auto& c : w) c = c == 'U' ? 'a' : 'b';
    s.insert(w);
  }
  std::vector<std::string> out;
  for (auto w : s) {
    for (auto& c : w) c = c == 'a' ? 'U' : 'D';
    out.push_back(w);
  }
  return out;
}

}  // namespace grandforest::testing
