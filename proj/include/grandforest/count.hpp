#pragma once

#include <cstdint>

#include "grandforest/core.hpp"

namespace grandforest::count {

/// Maximum tree height allowed in a banded count. The reflection band has
/// half-width `max_height + 1`.
struct BandSpec {
  std::uint64_t max_height = 0;
};

/// binom(n, k), zero when k < 0 or k > n. Throws Error{NegativeUpperIndex} for n < 0.
Count binomial(std::int64_t n, std::int64_t k);

Count catalan(std::uint64_t n);

/// Ordered forests with n edges: binom(2n-1, n) = binom(2n, n) / 2, and 1 at n = 0.
Count forest_count(std::uint64_t n);

/// Balanced Up/Down words of length 2n.
Count grand_dyck_count(std::uint64_t n);

/// Forests with n edges whose trees all have height at most band.max_height,
/// by the alternating reflection sum over a strip of half-width h + 1.
Count banded_forest_count(std::uint64_t n, BandSpec band);

/// Forests with n edges and exactly k trees.
Count forest_count_by_trees(std::uint64_t n, std::uint64_t k);

}  // namespace grandforest::count
