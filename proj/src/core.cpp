#include "grandforest/core.hpp"

#include <algorithm>

#include "grandforest/biject.hpp"

namespace grandforest {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IllegalCharacter: return "IllegalCharacter";
    case ErrorCode::Unbalanced: return "Unbalanced";
    case ErrorCode::TokenNotDyck: return "TokenNotDyck";
    case ErrorCode::EmptyToken: return "EmptyToken";
    case ErrorCode::NotDyck: return "NotDyck";
    case ErrorCode::InvalidForest: return "InvalidForest";
    case ErrorCode::NegativeUpperIndex: return "NegativeUpperIndex";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

namespace {

std::int64_t excess(const StepWord& steps) {
  std::int64_t level = 0;
  for (Step s : steps) level += s == Step::Up ? 1 : -1;
  return level;
}

void require_balanced(const StepWord& steps) {
  if (auto e = excess(steps); e != 0) {
    throw Error(ErrorCode::Unbalanced, e,
                "unbalanced word: Up count exceeds Down count by " + std::to_string(e));
  }
}

}  // namespace

GrandDyckPath::GrandDyckPath(StepWord steps) : steps_(std::move(steps)) {
  require_balanced(steps_);
}

DyckPath::DyckPath(StepWord steps) : steps_(std::move(steps)) {
  require_balanced(steps_);
  std::int64_t level = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    level += steps_[i] == Step::Up ? 1 : -1;
    if (level < 0) {
      throw Error(ErrorCode::NotDyck, static_cast<std::int64_t>(i),
                  "path dips below level 0 at step " + std::to_string(i));
    }
  }
}

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    if (trees_[i].children.empty()) {
      throw Error(ErrorCode::InvalidForest, static_cast<std::int64_t>(i),
                  "forest tree " + std::to_string(i) + " has no edges");
    }
  }
}

std::size_t Forest::edges() const {
  std::size_t total = 0;
  for (const auto& t : trees_) total += tree_edges(t);
  return total;
}

std::size_t tree_edges(const Tree& t) {
  std::size_t total = 0;
  for (const auto& c : t.children) total += 1 + tree_edges(c);
  return total;
}

std::size_t tree_height(const Tree& t) {
  std::size_t h = 0;
  for (const auto& c : t.children) h = std::max(h, 1 + tree_height(c));
  return h;
}

std::size_t forest_height(const Forest& f) {
  std::size_t h = 0;
  for (const auto& t : f.trees()) h = std::max(h, tree_height(t));
  return h;
}

std::vector<std::int64_t> levels(const StepWord& steps) {
  std::vector<std::int64_t> out;
  out.reserve(steps.size() + 1);
  out.push_back(0);
  for (Step s : steps) out.push_back(out.back() + (s == Step::Up ? 1 : -1));
  return out;
}

Peak path_peak(const StepWord& steps) {
  Peak peak;
  std::int64_t level = 0;
  for (Step s : steps) {
    level += s == Step::Up ? 1 : -1;
    peak.max_level = std::max(peak.max_level, level);
    peak.min_level = std::min(peak.min_level, level);
  }
  return peak;
}

Peak path_peak(const GrandDyckPath& p) { return path_peak(p.steps()); }

GrandDyckPath parse_word(std::string_view text) {
  StepWord steps;
  steps.reserve(text.size());
  // Alphabet is fixed by the first character.
  char up = 0;
  char down = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (up == 0) {
      if (c == 'U' || c == 'D') {
        up = 'U';
        down = 'D';
      } else if (c == '(' || c == ')') {
        up = '(';
        down = ')';
      }
    }
    if (c == up) {
      steps.push_back(Step::Up);
    } else if (c == down) {
      steps.push_back(Step::Down);
    } else {
      throw Error(ErrorCode::IllegalCharacter, static_cast<std::int64_t>(i),
                  "illegal character at position " + std::to_string(i));
    }
  }
  return GrandDyckPath(std::move(steps));
}

std::string format_word(const StepWord& steps, Alphabet alphabet) {
  const char up = alphabet == Alphabet::UD ? 'U' : '(';
  const char down = alphabet == Alphabet::UD ? 'D' : ')';
  std::string out;
  out.reserve(steps.size());
  for (Step s : steps) out.push_back(s == Step::Up ? up : down);
  return out;
}

std::string format_word(const GrandDyckPath& p, Alphabet alphabet) {
  return format_word(p.steps(), alphabet);
}

std::string format_word(const DyckPath& p, Alphabet alphabet) {
  return format_word(p.steps(), alphabet);
}

Forest parse_forest(std::string_view text) {
  std::vector<Tree> trees;
  if (text.empty()) return Forest{};

  std::size_t token_index = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t space = text.find(' ', start);
    const std::size_t end = space == std::string_view::npos ? text.size() : space;
    const std::string_view token = text.substr(start, end - start);
    if (token.empty()) {
      throw Error(ErrorCode::EmptyToken, static_cast<std::int64_t>(token_index),
                  "empty tree token at index " + std::to_string(token_index));
    }

    StepWord steps;
    steps.reserve(token.size());
    for (std::size_t i = 0; i < token.size(); ++i) {
      if (token[i] == '(') {
        steps.push_back(Step::Up);
      } else if (token[i] == ')') {
        steps.push_back(Step::Down);
      } else {
        const auto pos = static_cast<std::int64_t>(start + i);
        throw Error(ErrorCode::IllegalCharacter, pos,
                    "illegal character at position " + std::to_string(pos));
      }
    }
    // Balance is checked before the prefix property so "(()" reports Unbalanced.
    GrandDyckPath balanced(steps);
    try {
      trees.push_back(dyck_to_tree(DyckPath(balanced.steps())));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotDyck) throw;
      throw Error(ErrorCode::TokenNotDyck, static_cast<std::int64_t>(token_index),
                  "tree token " + std::to_string(token_index) + " is not a Dyck word");
    }

    if (space == std::string_view::npos) break;
    start = space + 1;
    ++token_index;
  }
  return Forest(std::move(trees));
}

std::string format_forest(const Forest& f) {
  std::string out;
  for (std::size_t i = 0; i < f.trees().size(); ++i) {
    if (i != 0) out.push_back(' ');
    out += format_word(tree_to_dyck(f.trees()[i]), Alphabet::Paren);
  }
  return out;
}

Tree edge_tree() { return Tree{{Tree{}}}; }

Tree cherry_tree() { return Tree{{Tree{}, Tree{}}}; }

Tree path_tree(std::size_t edges) {
  Tree t;
  for (std::size_t i = 0; i < edges; ++i) t = Tree{{std::move(t)}};
  return t;
}

}  // namespace grandforest
