#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace grandforest {

/// Exact nonnegative counts. Never mixed with floating point.
using Count = boost::multiprecision::cpp_int;

enum class ErrorCode {
  IllegalCharacter,
  Unbalanced,
  TokenNotDyck,
  EmptyToken,
  NotDyck,
  InvalidForest,
  NegativeUpperIndex,
  RankOutOfRange,
  TooLarge,
};

const char* to_string(ErrorCode code);

/// Every validation failure in the library is reported through this type.
/// `detail()` carries the position, token index or excess, depending on code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::int64_t detail, const std::string& message)
      : std::runtime_error(message), code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  std::int64_t detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::int64_t detail_;
};

enum class Step : std::uint8_t { Up, Down };

constexpr Step reflect(Step s) noexcept { return s == Step::Up ? Step::Down : Step::Up; }

using StepWord = std::vector<Step>;

enum class Alphabet { UD, Paren };

/// Balanced step word (equal numbers of Up and Down); may dip below zero.
class GrandDyckPath {
 public:
  GrandDyckPath() = default;

  /// Throws Error{Unbalanced} when the counts differ.
  explicit GrandDyckPath(StepWord steps);

  const StepWord& steps() const noexcept { return steps_; }
  std::size_t length() const noexcept { return steps_.size(); }
  std::size_t semilength() const noexcept { return steps_.size() / 2; }
  bool empty() const noexcept { return steps_.empty(); }

  friend bool operator==(const GrandDyckPath&, const GrandDyckPath&) = default;
  friend auto operator<=>(const GrandDyckPath&, const GrandDyckPath&) = default;

 private:
  StepWord steps_;
};

/// Balanced step word whose every prefix has at least as many Ups as Downs.
class DyckPath {
 public:
  DyckPath() = default;

  /// Throws Error{Unbalanced} or Error{NotDyck} (detail = first offending step).
  explicit DyckPath(StepWord steps);

  const StepWord& steps() const noexcept { return steps_; }
  std::size_t length() const noexcept { return steps_.size(); }
  std::size_t semilength() const noexcept { return steps_.size() / 2; }
  bool empty() const noexcept { return steps_.empty(); }

  GrandDyckPath as_grand() const { return GrandDyckPath(steps_); }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  StepWord steps_;
};

/// Ordered rooted tree. A childless node is a leaf (0 edges).
struct Tree {
  std::vector<Tree> children;

  static Tree leaf() { return Tree{}; }

  friend bool operator==(const Tree&, const Tree&) = default;
};

/// Sequence of trees, each with at least one edge.
class Forest {
 public:
  Forest() = default;

  /// Throws Error{InvalidForest} (detail = tree index) if a tree has no edge.
  explicit Forest(std::vector<Tree> trees);

  const std::vector<Tree>& trees() const noexcept { return trees_; }
  std::size_t size() const noexcept { return trees_.size(); }
  bool empty() const noexcept { return trees_.empty(); }
  std::size_t edges() const;

  friend bool operator==(const Forest&, const Forest&) = default;

 private:
  std::vector<Tree> trees_;
};

// Height is measured in edges: a leaf has height 0, a single edge height 1.
std::size_t tree_edges(const Tree& t);
std::size_t tree_height(const Tree& t);

/// Maximum tree height in the forest, 0 for the empty forest.
std::size_t forest_height(const Forest& f);

/// Levels l_0 = 0, l_{i+1} = l_i +/- 1. Size is steps.size() + 1.
std::vector<std::int64_t> levels(const StepWord& steps);

struct Peak {
  std::int64_t max_level = 0;
  std::int64_t min_level = 0;

  friend bool operator==(const Peak&, const Peak&) = default;
};

Peak path_peak(const GrandDyckPath& p);
Peak path_peak(const StepWord& steps);

// Text formats. A word uses either "UD" or "()" throughout, '(' meaning Up.
GrandDyckPath parse_word(std::string_view text);
std::string format_word(const StepWord& steps, Alphabet alphabet = Alphabet::UD);
std::string format_word(const GrandDyckPath& p, Alphabet alphabet = Alphabet::UD);
std::string format_word(const DyckPath& p, Alphabet alphabet = Alphabet::UD);

/// Forest text: trees as parenthesis Dyck words separated by single spaces.
Forest parse_forest(std::string_view text);
std::string format_forest(const Forest& f);

// Common small trees.
Tree edge_tree();
Tree cherry_tree();
Tree path_tree(std::size_t edges);

}  // namespace grandforest
