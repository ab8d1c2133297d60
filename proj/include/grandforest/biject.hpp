#pragma once

#include <vector>

#include "grandforest/core.hpp"

namespace grandforest {

// Preorder correspondence between ordered trees and Dyck paths: Up when
// descending an edge, Down when climbing back.
DyckPath tree_to_dyck(const Tree& t);
Tree dyck_to_tree(const DyckPath& p);

/// Swaps Up and Down at every step.
GrandDyckPath mirror(const GrandDyckPath& p);

enum class Side { Above, Below };

/// A maximal run of same-side arches, stored reflected onto the Above side.
struct SignedSegment {
  Side side = Side::Above;
  DyckPath path;

  friend bool operator==(const SignedSegment&, const SignedSegment&) = default;
};

/// Splits a path where it crosses level 0. A touch that stays on the same side
/// does not split.
std::vector<SignedSegment> decompose_crossings(const GrandDyckPath& p);

/// Inverse of decompose_crossings.
GrandDyckPath recompose(const std::vector<SignedSegment>& segments);

/// Grand-Dyck path that is empty or starts with an Up step. One per forest.
class CanonicalGrandDyck {
 public:
  CanonicalGrandDyck() = default;

  /// Reflects a Down-first path to its mirror.
  static CanonicalGrandDyck canonicalize(const GrandDyckPath& p);

  const GrandDyckPath& path() const noexcept { return path_; }

  friend bool operator==(const CanonicalGrandDyck&, const CanonicalGrandDyck&) = default;

 private:
  explicit CanonicalGrandDyck(GrandDyckPath p) : path_(std::move(p)) {}

  GrandDyckPath path_;
};

/// Odd-numbered trees ride above the diagonal and even-numbered ones below.
CanonicalGrandDyck forest_to_grand_dyck(const Forest& f);

/// Two-to-one on nonempty paths: p and mirror(p) give the same forest.
Forest grand_dyck_to_forest(const GrandDyckPath& p);

}  // namespace grandforest
