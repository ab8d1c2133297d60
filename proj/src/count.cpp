#include "grandforest/count.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace grandforest::count {

Count binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) {
    throw Error(ErrorCode::NegativeUpperIndex, n,
                "binomial upper index must be nonnegative, got " + std::to_string(n));
  }
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count result = 1;
  // After step i the accumulator equals binom(n - k + i, i), so each division is exact.
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Count catalan(std::uint64_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return binomial(2 * m, m) / (m + 1);
}

Count forest_count(std::uint64_t n) {
  if (n == 0) return 1;
  const auto m = static_cast<std::int64_t>(n);
  Count odd_form = binomial(2 * m - 1, m);
  if (2 * odd_form != binomial(2 * m, m)) {
    throw std::logic_error("forest_count: binom(2n-1, n) != binom(2n, n) / 2");
  }
  return odd_form;
}

Count grand_dyck_count(std::uint64_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return binomial(2 * m, m);
}

Count banded_forest_count(std::uint64_t n, BandSpec band) {
  if (n == 0) return 1;
  const auto m = static_cast<std::int64_t>(n);
  const auto width = static_cast<std::int64_t>(band.max_height) + 1;
  // Beyond |k| > K every lower index falls outside [0, 2n].
  const std::int64_t bound = (2 * m + width - 1) / width + 1;

  Count sum = 0;
  for (std::int64_t k = -bound; k <= bound; ++k) {
    sum += binomial(2 * m, m + 2 * k * width);
    sum -= binomial(2 * m, m + (2 * k + 1) * width);
  }
  if (sum < 0 || (sum & 1) != 0) {
    throw std::logic_error("banded_forest_count: reflection sum is not a nonnegative even integer");
  }
  return sum / 2;
}

Count forest_count_by_trees(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  // table[e][t]: forests with e edges and t trees, built by prepending a first tree of m edges.
  std::vector<std::vector<Count>> table(n + 1, std::vector<Count>(k + 1, 0));
  table[0][0] = 1;
  std::vector<Count> cat(n + 1);
  for (std::uint64_t m = 0; m <= n; ++m) cat[m] = catalan(m);
  for (std::uint64_t e = 1; e <= n; ++e) {
    for (std::uint64_t t = 1; t <= std::min(e, k); ++t) {
      Count acc = 0;
      for (std::uint64_t m = 1; m <= e; ++m) acc += cat[m] * table[e - m][t - 1];
      table[e][t] = acc;
    }
  }
  return table[n][k];
}

}  // namespace grandforest::count
