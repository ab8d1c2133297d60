#include "grandforest/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "grandforest/biject.hpp"
#include "grandforest/count.hpp"
#include "grandforest/enumerate.hpp"

namespace grandforest::oracle {

namespace {

void guard(std::uint64_t n) {
  if (n > kMaxBruteN) {
    throw Error(ErrorCode::TooLarge, static_cast<std::int64_t>(n),
                "brute force limited to n <= " + std::to_string(kMaxBruteN));
  }
}

// Bit i set means step i is Down.
StepWord word_from_mask(std::uint32_t mask, std::size_t len) {
  StepWord w(len);
  for (std::size_t i = 0; i < len; ++i) w[i] = (mask >> i) & 1U ? Step::Down : Step::Up;
  return w;
}

template <typename Visit>
void for_each_canonical_word(std::uint64_t n, Visit&& visit) {
  const auto len = static_cast<std::size_t>(2 * n);
  const std::uint32_t limit = std::uint32_t{1} << len;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (static_cast<std::uint64_t>(std::popcount(mask)) != n) continue;
    if (len != 0 && (mask & 1U) != 0) continue;
    visit(word_from_mask(mask, len));
  }
}

}  // namespace

Count brute_count_forests(std::uint64_t n, std::optional<std::uint64_t> max_height) {
  guard(n);
  std::unordered_set<std::string> seen;
  for_each_canonical_word(n, [&](StepWord w) {
    Forest f = grand_dyck_to_forest(GrandDyckPath(std::move(w)));
    if (max_height && forest_height(f) > *max_height) return;
    seen.insert(format_forest(f));
  });
  return Count(seen.size());
}

Count recurrence_forest_count(std::uint64_t n) {
  std::vector<Count> catalan(n + 1);
  catalan[0] = 1;
  for (std::uint64_t m = 1; m <= n; ++m) {
    for (std::uint64_t i = 0; i < m; ++i) catalan[m] += catalan[i] * catalan[m - 1 - i];
  }
  std::vector<Count> forests(n + 1);
  forests[0] = 1;
  for (std::uint64_t e = 1; e <= n; ++e) {
    for (std::uint64_t m = 1; m <= e; ++m) forests[e] += catalan[m] * forests[e - m];
  }
  return forests[n];
}

Count brute_band_paths(std::uint64_t n, std::uint64_t h) {
  guard(n);
  const auto band = static_cast<std::int64_t>(h);
  std::uint64_t total = 0;
  for_each_canonical_word(n, [&](StepWord w) {
    const Peak peak = path_peak(w);
    const bool in_window = peak.max_level <= band && peak.min_level >= -band;

    bool segments_fit = true;
    for (const auto& seg : decompose_crossings(GrandDyckPath(w))) {
      if (path_peak(seg.path.steps()).max_level > band) segments_fit = false;
    }
    if (in_window != segments_fit) {
      throw std::logic_error("band window and crossing segments disagree on " +
                             format_word(w));
    }
    if (in_window) ++total;
  });
  return Count(total);
}

Count brute_grand_dyck_count(std::uint64_t n) {
  guard(n);
  const auto len = static_cast<std::size_t>(2 * n);
  std::uint64_t total = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << len); ++mask) {
    std::int64_t level = 0;
    for (std::size_t i = 0; i < len; ++i) level += (mask >> i) & 1U ? -1 : 1;
    if (level == 0) ++total;
  }
  return Count(total);
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::string Report::render() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << "CHECK " << c.name << " n=" << c.lo << ".." << c.hi << ' '
        << (c.passed ? "PASS" : "FAIL") << '\n';
  }
  return out.str();
}

namespace {

// Runs `body(n)` for n in [lo, hi]; any false return or exception fails the check.
template <typename Body>
CheckResult run_check(std::string name, std::uint64_t lo, std::uint64_t hi, Body&& body) {
  CheckResult result{std::move(name), lo, hi, true};
  try {
    for (std::uint64_t n = lo; n <= hi && result.passed; ++n) result.passed = body(n);
  } catch (const std::exception&) {
    result.passed = false;
  }
  return result;
}

std::uint64_t count_up_steps(const std::string& text) {
  return static_cast<std::uint64_t>(std::count(text.begin(), text.end(), '('));
}

bool check_word_roundtrip(std::uint64_t n) {
  auto stream = enumerate::enum_grand_dyck(n, false);
  while (auto p = stream.next()) {
    for (Alphabet a : {Alphabet::UD, Alphabet::Paren}) {
      if (parse_word(format_word(*p, a)) != *p) return false;
    }
  }
  return true;
}

bool check_height_is_max_level(std::uint64_t n) {
  auto stream = enumerate::enum_dyck(n);
  while (auto p = stream.next()) {
    const auto height = static_cast<std::int64_t>(tree_height(dyck_to_tree(*p)));
    if (height != path_peak(p->steps()).max_level) return false;
  }
  return true;
}

bool check_edge_additivity(std::uint64_t n) {
  auto stream = enumerate::enum_forests(n);
  while (auto f = stream.next()) {
    const std::string text = format_forest(*f);
    const Forest parsed = parse_forest(text);
    std::size_t edges = 0;
    for (const auto& t : parsed.trees()) edges += tree_edges(t);
    if (parsed != *f || edges != count_up_steps(text) || edges != n) return false;
  }
  return true;
}

bool check_empty_forest_unique(std::uint64_t n) {
  auto forests = enumerate::collect(enumerate::enum_forests(n));
  if (n == 0) return forests.size() == 1 && forests.front().empty() && format_forest(forests.front()).empty();
  return std::none_of(forests.begin(), forests.end(), [](const Forest& f) { return f.empty(); });
}

bool check_wide_band(std::uint64_t n) {
  for (std::uint64_t h = n; h <= n + 3; ++h) {
    if (count::banded_forest_count(n, {h}) != count::forest_count(n)) return false;
  }
  return true;
}

bool check_band_monotone(std::uint64_t n) {
  const Count total = count::forest_count(n);
  for (std::uint64_t h = 0; h <= n + 1; ++h) {
    const Count lower = count::banded_forest_count(n, {h});
    const Count upper = count::banded_forest_count(n, {h + 1});
    if (lower > upper || upper > total) return false;
  }
  return true;
}

bool check_trees_partition(std::uint64_t n) {
  Count sum = 0;
  for (std::uint64_t k = 0; k <= n; ++k) sum += count::forest_count_by_trees(n, k);
  return sum == count::forest_count(n);
}

bool check_convolution(std::uint64_t n) {
  Count sum = 0;
  for (std::uint64_t m = 1; m <= n; ++m) sum += count::catalan(m) * count::forest_count(n - m);
  return sum == count::forest_count(n);
}

bool check_klarner(std::uint64_t n) {
  auto stream = enumerate::enum_dyck(n);
  while (auto p = stream.next()) {
    const Tree t = dyck_to_tree(*p);
    const DyckPath back = tree_to_dyck(t);
    if (back != *p || back.semilength() != tree_edges(t)) return false;
    if (path_peak(back.steps()).max_level != static_cast<std::int64_t>(tree_height(t))) return false;
  }
  return true;
}

bool check_forest_roundtrip(std::uint64_t n) {
  auto stream = enumerate::enum_forests(n);
  while (auto f = stream.next()) {
    if (grand_dyck_to_forest(forest_to_grand_dyck(*f).path()) != *f) return false;
  }
  return true;
}

bool check_path_roundtrip(std::uint64_t n) {
  auto stream = enumerate::enum_grand_dyck(n, true);
  while (auto p = stream.next()) {
    if (forest_to_grand_dyck(grand_dyck_to_forest(*p)).path() != *p) return false;
  }
  return true;
}

bool check_mirror_quotient(std::uint64_t n) {
  auto stream = enumerate::enum_grand_dyck(n, false);
  while (auto p = stream.next()) {
    const GrandDyckPath m = mirror(*p);
    if (grand_dyck_to_forest(m) != grand_dyck_to_forest(*p)) return false;
    if (mirror(m) != *p) return false;
    if (!p->empty()) {
      const bool p_up = p->steps().front() == Step::Up;
      const bool m_up = m.steps().front() == Step::Up;
      if (p_up == m_up) return false;
    }
  }
  return true;
}

bool check_alternation(std::uint64_t n) {
  auto stream = enumerate::enum_grand_dyck(n, false);
  while (auto p = stream.next()) {
    const auto segments = decompose_crossings(*p);
    for (std::size_t i = 0; i < segments.size(); ++i) {
      if (segments[i].path.empty()) return false;
      if (i > 0 && segments[i].side == segments[i - 1].side) return false;
    }
    if (recompose(segments) != *p) return false;
  }
  return true;
}

bool check_bijection_count(std::uint64_t n) {
  std::set<std::string> distinct;
  auto stream = enumerate::enum_grand_dyck(n, false);
  while (auto p = stream.next()) distinct.insert(format_forest(grand_dyck_to_forest(*p)));
  return Count(distinct.size()) == count::forest_count(n);
}

bool check_rank_sequence(std::uint64_t n) {
  Count expected = 0;
  auto stream = enumerate::enum_forests(n);
  while (auto f = stream.next()) {
    const auto rank = enumerate::rank_forest(*f);
    if (rank.value != expected) return false;
    if (enumerate::unrank_forest(n, rank) != *f) return false;
    ++expected;
  }
  return expected == count::forest_count(n);
}

template <typename Stream>
Count stream_length(Stream stream) {
  std::uint64_t total = 0;
  while (stream.next()) ++total;
  return Count(total);
}

bool check_cardinalities(std::uint64_t n) {
  if (stream_length(enumerate::enum_dyck(n)) != count::catalan(n)) return false;
  if (stream_length(enumerate::enum_forests(n)) != count::forest_count(n)) return false;
  if (stream_length(enumerate::enum_grand_dyck(n, false)) != count::grand_dyck_count(n)) return false;
  for (std::uint64_t h = 0; h <= n; ++h) {
    if (stream_length(enumerate::enum_forests(n, h)) != count::banded_forest_count(n, {h})) return false;
  }
  return true;
}

bool check_banded_subset(std::uint64_t n) {
  const auto all = enumerate::collect(enumerate::enum_forests(n));
  for (std::uint64_t h = 0; h <= n; ++h) {
    std::vector<Forest> filtered;
    std::copy_if(all.begin(), all.end(), std::back_inserter(filtered),
                 [h](const Forest& f) { return forest_height(f) <= h; });
    if (enumerate::collect(enumerate::enum_forests(n, h)) != filtered) return false;
  }
  return true;
}

bool check_duplicate_free(std::uint64_t n) {
  std::set<std::string> forests;
  std::uint64_t forest_total = 0;
  auto fs = enumerate::enum_forests(n);
  while (auto f = fs.next()) {
    forests.insert(format_forest(*f));
    ++forest_total;
  }
  std::set<GrandDyckPath> paths;
  std::uint64_t path_total = 0;
  auto ps = enumerate::enum_grand_dyck(n, false);
  while (auto p = ps.next()) {
    paths.insert(*p);
    ++path_total;
  }
  return forests.size() == forest_total && paths.size() == path_total;
}

}  // namespace

Report selftest(std::uint64_t max_n, const SelftestOptions& options) {
  guard(max_n);
  const BinomialFn binomial = options.binomial ? options.binomial : BinomialFn(count::binomial);
  const std::uint64_t m = max_n;
  // Exhaustive structural walks stop at kMaxStructuralN; raw-word scans go to max_n.
  const std::uint64_t s = std::min(m, kMaxStructuralN);

  Report report;
  auto add = [&](CheckResult r) { report.checks.push_back(std::move(r)); };

  // core
  add(run_check("word_roundtrip", 0, s, check_word_roundtrip));
  add(run_check("height_equals_max_level", 0, std::min<std::uint64_t>(m, 8), check_height_is_max_level));
  add(run_check("forest_edge_additivity", 0, s, check_edge_additivity));
  add(run_check("empty_forest_unique", 0, s, check_empty_forest_unique));

  // count
  add(run_check("eq1_dual_form", 1, 64, [&](std::uint64_t n) {
    const auto k = static_cast<std::int64_t>(n);
    return 2 * binomial(2 * k - 1, k) == binomial(2 * k, k);
  }));
  add(run_check("a001700_table", 0, 8, [](std::uint64_t n) {
    static const std::uint64_t table[] = {1, 3, 10, 35, 126, 462, 1716, 6435, 24310};
    return count::forest_count(n + 1) == table[n];
  }));
  add(run_check("band_wide_is_vacuous", 0, s, check_wide_band));
  add(run_check("band_monotone", 0, s, check_band_monotone));
  add(run_check("trees_partition", 0, s, check_trees_partition));
  add(run_check("convolution_recurrence", 1, 32, check_convolution));

  // biject
  add(run_check("klarner_measures", 0, std::min<std::uint64_t>(m, 8), check_klarner));
  add(run_check("forest_roundtrip", 0, s, check_forest_roundtrip));
  add(run_check("path_roundtrip", 0, s, check_path_roundtrip));
  add(run_check("mirror_quotient", 0, s, check_mirror_quotient));
  add(run_check("crossing_alternation", 0, s, check_alternation));
  add(run_check("bijection_count", 0, s, check_bijection_count));

  // enumerate
  add(run_check("rank_sequence", 0, s, check_rank_sequence));
  add(run_check("stream_cardinalities", 0, s, check_cardinalities));
  add(run_check("banded_subset", 0, s, check_banded_subset));
  add(run_check("duplicate_free", 0, s, check_duplicate_free));

  // oracle
  add(run_check("oracle_forest_count", 0, m, [](std::uint64_t n) {
    const Count closed = count::forest_count(n);
    return brute_count_forests(n) == closed && recurrence_forest_count(n) == closed;
  }));
  add(run_check("oracle_band", 0, s, [](std::uint64_t n) {
    for (std::uint64_t h = 0; h <= 6; ++h) {
      const Count closed = count::banded_forest_count(n, {h});
      if (brute_count_forests(n, h) != closed || brute_band_paths(n, h) != closed) return false;
    }
    return true;
  }));
  add(run_check("oracle_grand_dyck", 0, m, [](std::uint64_t n) {
    return brute_grand_dyck_count(n) == count::grand_dyck_count(n);
  }));
  return report;
}

}  // namespace grandforest::oracle
