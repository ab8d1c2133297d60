#include "grandforest/enumerate.hpp"

#include <cstdlib>

#include "grandforest/count.hpp"

namespace grandforest::enumerate {

WordStream::WordStream(std::uint64_t n, std::int64_t floor, std::int64_t ceiling,
                       bool up_first_only)
    : n_(n), floor_(floor), ceiling_(ceiling), up_first_only_(up_first_only), word_(2 * n) {}

// Greedy lexicographically smallest completion of word_[pos..] starting at
// `level`: take Up whenever it stays in the band and 0 stays reachable.
bool WordStream::fill_from(std::size_t pos, std::int64_t level) {
  const std::size_t len = word_.size();
  for (std::size_t i = pos; i < len; ++i) {
    const auto remaining = static_cast<std::int64_t>(len - i - 1);
    if (level + 1 <= ceiling_ && std::abs(level + 1) <= remaining) {
      word_[i] = Step::Up;
      ++level;
    } else if (level - 1 >= floor_ && std::abs(level - 1) <= remaining) {
      word_[i] = Step::Down;
      --level;
    } else {
      return false;
    }
  }
  return level == 0;
}

bool WordStream::advance() {
  const auto lv = levels(word_);
  // Rightmost Up that can become Down and still be completed.
  for (std::size_t i = word_.size(); i-- > 0;) {
    if (word_[i] != Step::Up) continue;
    if (i == 0 && up_first_only_) return false;
    const std::int64_t level = lv[i] - 1;
    const auto remaining = static_cast<std::int64_t>(word_.size() - i - 1);
    if (level < floor_ || std::abs(level) > remaining) continue;
    word_[i] = Step::Down;
    if (fill_from(i + 1, level)) return true;
    // Unreachable: a feasible level always admits a completion.
    return false;
  }
  return false;
}

std::optional<StepWord> WordStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (!fill_from(0, 0) || (up_first_only_ && !word_.empty() && word_[0] != Step::Up)) {
      done_ = true;
      return std::nullopt;
    }
    return word_;
  }
  if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return word_;
}

DyckStream::DyckStream(std::uint64_t n)
    : words_(n, 0, static_cast<std::int64_t>(n), false) {}

std::optional<DyckPath> DyckStream::next() {
  if (auto w = words_.next()) return DyckPath(std::move(*w));
  return std::nullopt;
}

GrandDyckStream::GrandDyckStream(std::uint64_t n, bool canonical_only)
    : words_(n, -static_cast<std::int64_t>(n), static_cast<std::int64_t>(n), canonical_only) {}

std::optional<GrandDyckPath> GrandDyckStream::next() {
  if (auto w = words_.next()) return GrandDyckPath(std::move(*w));
  return std::nullopt;
}

namespace {

// Every tree of a forest is a same-side excursion, so a height bound h on the
// trees is exactly the band [-h, h] on the canonical word.
std::int64_t band_limit(std::uint64_t n, std::optional<std::uint64_t> max_height) {
  if (!max_height || *max_height > n) return static_cast<std::int64_t>(n);
  return static_cast<std::int64_t>(*max_height);
}

}  // namespace

ForestStream::ForestStream(std::uint64_t n, std::optional<std::uint64_t> max_height)
    : words_(n, -band_limit(n, max_height), band_limit(n, max_height), true) {}

std::optional<Forest> ForestStream::next() {
  if (auto w = words_.next()) return grand_dyck_to_forest(GrandDyckPath(std::move(*w)));
  return std::nullopt;
}

namespace {

// Balanced completions of a prefix ending at `level` with `remaining` steps.
Count completions(std::int64_t remaining, std::int64_t level) {
  if (std::abs(level) > remaining || ((remaining + level) & 1) != 0) return 0;
  return count::binomial(remaining, (remaining + level) / 2);
}

}  // namespace

Rank rank_forest(const Forest& f) {
  const CanonicalGrandDyck canonical = forest_to_grand_dyck(f);
  const StepWord& w = canonical.path().steps();
  const auto len = static_cast<std::int64_t>(w.size());
  Count rank = 0;
  std::int64_t level = w.empty() ? 0 : 1;
  for (std::int64_t i = 1; i < len; ++i) {
    if (w[i] == Step::Down) {
      rank += completions(len - i - 1, level + 1);
      --level;
    } else {
      ++level;
    }
  }
  return Rank{rank};
}

Forest unrank_forest(std::uint64_t n, const Rank& r) {
  const Count total = count::forest_count(n);
  if (r.value < 0 || r.value >= total) {
    throw Error(ErrorCode::RankOutOfRange, static_cast<std::int64_t>(n),
                "rank " + r.value.str() + " out of range [0, " + total.str() + ")");
  }
  if (n == 0) return Forest{};

  const auto len = static_cast<std::int64_t>(2 * n);
  StepWord w(static_cast<std::size_t>(len));
  w[0] = Step::Up;
  std::int64_t level = 1;
  Count rest = r.value;
  for (std::int64_t i = 1; i < len; ++i) {
    const Count with_up = completions(len - i - 1, level + 1);
    if (rest < with_up) {
      w[i] = Step::Up;
      ++level;
    } else {
      rest -= with_up;
      w[i] = Step::Down;
      --level;
    }
  }
  return grand_dyck_to_forest(GrandDyckPath(std::move(w)));
}

Count uniform_below(const Count& bound, std::mt19937_64& rng) {
  if (bound <= 1) return 0;
  const Count top = bound - 1;
  const std::size_t bits = boost::multiprecision::msb(top) + 1;
  const std::size_t words = (bits + 63) / 64;
  const Count mask = (Count(1) << bits) - 1;
  while (true) {
    Count draw = 0;
    for (std::size_t i = 0; i < words; ++i) draw = (draw << 64) | Count(rng());
    draw &= mask;
    if (draw < bound) return draw;
  }
}

ForestSampler::ForestSampler(const SampleSpec& spec)
    : spec_(spec), total_(count::forest_count(spec.n)), rng_(spec.seed) {}

std::optional<Forest> ForestSampler::next() {
  if (emitted_ >= spec_.count) return std::nullopt;
  ++emitted_;
  return unrank_forest(spec_.n, Rank{uniform_below(total_, rng_)});
}

}  // namespace grandforest::enumerate
