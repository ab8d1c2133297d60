#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "grandforest/biject.hpp"
#include "grandforest/core.hpp"

namespace grandforest::enumerate {

/// 0-based position in the lexicographic order (Up < Down) of canonical words.
struct Rank {
  Count value;

  friend bool operator==(const Rank&, const Rank&) = default;
};

/// Lazily walks, in lexicographic order with Up < Down, every balanced word
/// of length 2n whose levels stay in [floor, ceiling]. Optionally restricted
/// to words that start with Up. Holds O(n) state.
class WordStream {
 public:
  WordStream(std::uint64_t n, std::int64_t floor, std::int64_t ceiling, bool up_first_only);

  std::optional<StepWord> next();

 private:
  bool advance();
  bool fill_from(std::size_t pos, std::int64_t level);

  std::uint64_t n_;
  std::int64_t floor_;
  std::int64_t ceiling_;
  bool up_first_only_;
  StepWord word_;
  bool started_ = false;
  bool done_ = false;
};

class DyckStream {
 public:
  explicit DyckStream(std::uint64_t n);
  std::optional<DyckPath> next();

 private:
  WordStream words_;
};

class GrandDyckStream {
 public:
  GrandDyckStream(std::uint64_t n, bool canonical_only);
  std::optional<GrandDyckPath> next();

 private:
  WordStream words_;
};

class ForestStream {
 public:
  ForestStream(std::uint64_t n, std::optional<std::uint64_t> max_height);
  std::optional<Forest> next();

 private:
  WordStream words_;
};

inline DyckStream enum_dyck(std::uint64_t n) { return DyckStream(n); }

inline ForestStream enum_forests(std::uint64_t n,
                                 std::optional<std::uint64_t> max_height = std::nullopt) {
  return ForestStream(n, max_height);
}

inline GrandDyckStream enum_grand_dyck(std::uint64_t n, bool canonical_only) {
  return GrandDyckStream(n, canonical_only);
}

/// Drains a stream into a vector. Only for small sizes.
template <typename Stream>
auto collect(Stream stream) {
  std::vector<typename decltype(stream.next())::value_type> out;
  while (auto item = stream.next()) out.push_back(std::move(*item));
  return out;
}

Rank rank_forest(const Forest& f);

/// Throws Error{RankOutOfRange} unless 0 <= r < forest_count(n).
Forest unrank_forest(std::uint64_t n, const Rank& r);

struct SampleSpec {
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t count = 1;
};

/// Uniform integer in [0, bound) from 64-bit words of `rng`, by masked
/// rejection. bound == 1 consumes nothing.
Count uniform_below(const Count& bound, std::mt19937_64& rng);

/// Seeded, reproducible uniform forest sampler. The generator is
/// std::mt19937_64, whose output sequence is fixed by the C++ standard.
class ForestSampler {
 public:
  explicit ForestSampler(const SampleSpec& spec);
  std::optional<Forest> next();

 private:
  SampleSpec spec_;
  Count total_;
  std::mt19937_64 rng_;
  std::uint64_t emitted_ = 0;
};

inline ForestSampler sample_forests(const SampleSpec& spec) { return ForestSampler(spec); }

}  // namespace grandforest::enumerate
