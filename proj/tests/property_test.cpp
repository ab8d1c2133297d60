// Randomized invariants over sizes too large for exhaustive checks.

#include <random>

#include <gtest/gtest.h>

#include "grandforest/biject.hpp"
#include "grandforest/count.hpp"
#include "grandforest/enumerate.hpp"

namespace grandforest {
namespace {

// Random balanced word of semilength n: shuffle n Ups and n Downs.
GrandDyckPath random_path(std::size_t n, std::mt19937_64& rng) {
  StepWord w(2 * n, Step::Down);
  std::fill(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n), Step::Up);
  std::shuffle(w.begin(), w.end(), rng);
  return GrandDyckPath(std::move(w));
}

TEST(Property, ForestPathRoundTrip) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng() % 60;
    const GrandDyckPath p = random_path(n, rng);
    const Forest f = grand_dyck_to_forest(p);
    ASSERT_EQ(f.edges(), n);
    ASSERT_EQ(grand_dyck_to_forest(mirror(p)), f);
    const auto canonical = CanonicalGrandDyck::canonicalize(p);
    ASSERT_EQ(forest_to_grand_dyck(f), canonical);
    ASSERT_EQ(parse_forest(format_forest(f)), f);
    ASSERT_EQ(parse_word(format_word(p, Alphabet::Paren)), p);
  }
}

TEST(Property, RankUnrankAtLargeSizes) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 80;
    const Forest f = grand_dyck_to_forest(random_path(n, rng));
    const auto r = enumerate::rank_forest(f);
    ASSERT_GE(r.value, 0);
    ASSERT_LT(r.value, count::forest_count(n));
    ASSERT_EQ(enumerate::unrank_forest(n, r), f);
  }
}

TEST(Property, RankOrderMatchesWordOrder) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    const Forest a = grand_dyck_to_forest(random_path(n, rng));
    const Forest b = grand_dyck_to_forest(random_path(n, rng));
    // Up < Down matches enum order Up = 0 < Down = 1.
    const bool words_less = forest_to_grand_dyck(a).path() < forest_to_grand_dyck(b).path();
    ASSERT_EQ(enumerate::rank_forest(a).value < enumerate::rank_forest(b).value, words_less);
  }
}

TEST(Property, ForestHeightIsBandWidth) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const GrandDyckPath p = random_path(1 + rng() % 40, rng);
    const Peak peak = path_peak(p);
    const auto width = static_cast<std::size_t>(std::max(peak.max_level, -peak.min_level));
    ASSERT_EQ(forest_height(grand_dyck_to_forest(p)), width);
  }
}

}  // namespace
}  // namespace grandforest
