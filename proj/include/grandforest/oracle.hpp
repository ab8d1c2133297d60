#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grandforest/core.hpp"

namespace grandforest::oracle {

/// Largest semilength the brute-force scans accept (2^24 raw words).
inline constexpr std::uint64_t kMaxBruteN = 12;

/// Largest size for the selftest's exhaustive walks over structured streams.
inline constexpr std::uint64_t kMaxStructuralN = 10;

/// Scans all 2^(2n) Up/Down words, keeps balanced Up-first ones, maps each to
/// its forest and counts distinct forests. Throws Error{TooLarge} above kMaxBruteN.
Count brute_count_forests(std::uint64_t n, std::optional<std::uint64_t> max_height = std::nullopt);

/// F_0 = 1, F_n = sum_{m=1..n} C_m F_{n-m}, with C_m from the Catalan
/// convolution recurrence. No binomial is evaluated.
Count recurrence_forest_count(std::uint64_t n);

/// Balanced Up-first words of length 2n whose levels stay in [-h, h]. Each
/// word's crossing segments are checked against h as well; disagreement
/// between the two checks throws std::logic_error.
Count brute_band_paths(std::uint64_t n, std::uint64_t h);

/// Number of balanced words among all 2^(2n) raw words.
Count brute_grand_dyck_count(std::uint64_t n);

struct CheckResult {
  std::string name;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  bool passed = false;
};

struct Report {
  std::vector<CheckResult> checks;

  bool passed() const;
  /// One "CHECK <name> n=<lo>..<hi> <PASS|FAIL>" line per check, LF-terminated.
  std::string render() const;
};

using BinomialFn = std::function<Count(std::int64_t, std::int64_t)>;

struct SelftestOptions {
  /// Binomial used by the closed-form identity checks. Tests swap in a
  /// corrupted one to make sure the report catches it.
  BinomialFn binomial;
};

/// Runs every cross-check at sizes up to max_n. Closed-form identities use
/// fixed ranges and structural walks stop at kMaxStructuralN; each report
/// line shows the range actually covered. Throws Error{TooLarge} above kMaxBruteN.
Report selftest(std::uint64_t max_n, const SelftestOptions& options = {});

}  // namespace grandforest::oracle
