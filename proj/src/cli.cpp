#include "grandforest/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "grandforest/biject.hpp"
#include "grandforest/count.hpp"
#include "grandforest/enumerate.hpp"

#ifndef GRANDFOREST_DATA_DIR
#define GRANDFOREST_DATA_DIR "data"
#endif

namespace grandforest::cli {

std::vector<BFileEntry> parse_bfile(std::string_view text) {
  std::vector<BFileEntry> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string index_text;
    std::string value_text;
    std::string extra;
    fields >> index_text >> value_text;
    if (value_text.empty() || (fields >> extra)) throw BFileError(line_no, "expected \"index value\"");

    BFileEntry entry;
    try {
      std::size_t used = 0;
      entry.index = std::stoll(index_text, &used);
      if (used != index_text.size()) throw std::invalid_argument(index_text);
    } catch (const std::exception&) {
      throw BFileError(line_no, "bad index '" + index_text + "'");
    }
    const bool digits = std::all_of(value_text.begin() + (value_text[0] == '-' ? 1 : 0),
                                    value_text.end(), [](unsigned char c) { return std::isdigit(c); });
    if (!digits || value_text == "-") throw BFileError(line_no, "bad value '" + value_text + "'");
    entry.value = Count(value_text);

    if (!entries.empty() && entry.index <= entries.back().index) {
      throw BFileError(line_no, "indices must be strictly increasing");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::string bfile_path(std::string_view sequence_id) {
  return "/" + std::string(sequence_id) + "/b" + std::string(sequence_id.substr(1)) + ".txt";
}

std::string fetch_bfile(std::string_view sequence_id, const std::string& base_url) {
  httplib::Client client(base_url);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  client.set_follow_location(true);
  auto res = client.Get(bfile_path(sequence_id));
  if (!res) throw IoError("fetch " + base_url + bfile_path(sequence_id) + ": " + httplib::to_string(res.error()));
  if (res->status != 200) {
    throw IoError("fetch " + base_url + bfile_path(sequence_id) + ": HTTP " + std::to_string(res->status));
  }
  return res->body;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return buf.str();
}

std::string render_path(const GrandDyckPath& p) {
  const auto lv = levels(p.steps());
  const Peak peak = path_peak(p);
  std::string out;
  for (std::int64_t row = peak.max_level - 1; row >= peak.min_level; --row) {
    std::string line(p.length(), ' ');
    for (std::size_t i = 0; i < p.length(); ++i) {
      if (std::min(lv[i], lv[i + 1]) == row) line[i] = p.steps()[i] == Step::Up ? '/' : '\\';
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out += line;
    out += '\n';
  }
  return out;
}

ExitCode selftest_exit_code(const oracle::Report& report) {
  return report.passed() ? ExitCode::Success : ExitCode::Mismatch;
}

namespace {

int code(ExitCode c) { return static_cast<int>(c); }

const std::vector<std::string> kKinds = {"forests", "trees", "dyck", "grand-dyck"};

struct Args {
  std::string kind;
  std::uint64_t n = 0;
  std::uint64_t height = 0;
  std::string format;
  std::string from;
  std::string to;
  std::string input;
  std::uint64_t seed = 0;
  std::uint64_t count = 1;
  std::string sequence_id;
  std::string bfile;
  bool fetch = false;
  std::uint64_t limit = 0;
  std::string oeis_base = "https://oeis.org";
  std::uint64_t max_n = 7;
};

Count count_of(const std::string& kind, std::uint64_t n, std::optional<std::uint64_t> height) {
  if (kind == "forests") return height ? count::banded_forest_count(n, {*height}) : count::forest_count(n);
  if (kind == "grand-dyck") return count::grand_dyck_count(n);
  return count::catalan(n);
}

int cmd_count(const Args& a, std::optional<std::uint64_t> height, std::ostream& out) {
  out << count_of(a.kind, a.n, height) << '\n';
  return code(ExitCode::Success);
}

int cmd_enumerate(const Args& a, std::optional<std::uint64_t> height, std::ostream& out) {
  const bool as_word = a.format.empty() ? (a.kind == "dyck" || a.kind == "grand-dyck") : a.format == "word";
  if (a.kind == "forests") {
    auto stream = enumerate::enum_forests(a.n, height);
    while (auto f = stream.next()) {
      out << (as_word ? format_word(forest_to_grand_dyck(*f).path()) : format_forest(*f)) << '\n';
    }
  } else if (a.kind == "grand-dyck") {
    auto stream = enumerate::enum_grand_dyck(a.n, false);
    while (auto p = stream.next()) {
      out << (as_word ? format_word(*p) : format_forest(grand_dyck_to_forest(*p))) << '\n';
    }
  } else {
    auto stream = enumerate::enum_dyck(a.n);
    while (auto p = stream.next()) out << format_word(*p, as_word ? Alphabet::UD : Alphabet::Paren) << '\n';
  }
  return code(ExitCode::Success);
}

int cmd_convert(const Args& a, std::ostream& out) {
  if (a.from == "word") {
    const GrandDyckPath p = parse_word(a.input);
    if (a.to == "forest") {
      out << format_forest(grand_dyck_to_forest(p)) << '\n';
    } else {
      out << format_word(CanonicalGrandDyck::canonicalize(p).path()) << '\n';
    }
  } else {
    const Forest f = parse_forest(a.input);
    if (a.to == "word") {
      out << format_word(forest_to_grand_dyck(f).path()) << '\n';
    } else {
      out << format_forest(f) << '\n';
    }
  }
  return code(ExitCode::Success);
}

int cmd_sample(const Args& a, std::ostream& out) {
  auto sampler = enumerate::sample_forests({a.n, a.seed, a.count});
  while (auto f = sampler.next()) out << format_forest(*f) << '\n';
  return code(ExitCode::Success);
}

int cmd_check_oeis(const Args& a, bool limited, std::ostream& out, std::ostream& err) {
  const bool forests = a.sequence_id == "A001700";
  if (!forests && a.sequence_id != "A000108") {
    err << "error: unknown sequence " << a.sequence_id << " (expected A001700 or A000108)\n";
    return code(ExitCode::InputError);
  }
  if (a.fetch && !a.bfile.empty()) {
    err << "error: --fetch and --bfile are mutually exclusive\n";
    return code(ExitCode::InputError);
  }

  std::string text;
  try {
    if (a.fetch) {
      text = fetch_bfile(a.sequence_id, a.oeis_base);
    } else {
      const std::string path = a.bfile.empty()
                                   ? std::string(GRANDFOREST_DATA_DIR) + "/b" + a.sequence_id.substr(1) + ".txt"
                                   : a.bfile;
      text = read_file(path);
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return code(ExitCode::IoError);
  }

  std::vector<BFileEntry> entries;
  try {
    entries = parse_bfile(text);
  } catch (const BFileError& e) {
    err << "error: malformed b-file: " << e.what() << '\n';
    return code(ExitCode::InputError);
  }
  if (limited) {
    if (entries.size() < a.limit) {
      err << "error: b-file has " << entries.size() << " terms, " << a.limit << " requested\n";
      return code(ExitCode::InputError);
    }
    entries.resize(a.limit);
  }

  bool all_ok = true;
  for (const auto& e : entries) {
    if (e.index < 0) {
      err << "error: negative index " << e.index << " in b-file\n";
      return code(ExitCode::InputError);
    }
    const auto i = static_cast<std::uint64_t>(e.index);
    const Count expected = forests ? count::forest_count(i + 1) : count::catalan(i);
    if (expected == e.value) {
      out << "OK " << e.index << ' ' << e.value << '\n';
    } else {
      all_ok = false;
      out << "MISMATCH " << e.index << ' ' << e.value << " expected " << expected << '\n';
    }
  }
  return code(all_ok ? ExitCode::Success : ExitCode::Mismatch);
}

int cmd_selftest(const Args& a, std::ostream& out) {
  const oracle::Report report = oracle::selftest(a.max_n);
  out << report.render();
  return code(selftest_exit_code(report));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting, enumeration and conversion of ordered forests and grand-Dyck paths",
               "grandforest"};
  app.require_subcommand(1);
  Args a;

  auto* count_cmd = app.add_subcommand("count", "Print the number of objects of a kind with n edges");
  count_cmd->add_option("kind", a.kind, "forests | trees | dyck | grand-dyck")->required()->check(CLI::IsMember(kKinds));
  count_cmd->add_option("n", a.n, "Number of edges (semilength)")->required();
  auto* count_height = count_cmd->add_option("--height", a.height, "Maximum tree height (forests only)");

  auto* enum_cmd = app.add_subcommand("enumerate", "List every object of a kind, one per line, in lexicographic order");
  enum_cmd->add_option("kind", a.kind, "forests | trees | dyck | grand-dyck")->required()->check(CLI::IsMember(kKinds));
  enum_cmd->add_option("n", a.n, "Number of edges (semilength)")->required();
  auto* enum_height = enum_cmd->add_option("--height", a.height, "Maximum tree height (forests only)");
  enum_cmd->add_option("--format", a.format, "word | forest")->check(CLI::IsMember({"word", "forest"}));

  auto* convert_cmd = app.add_subcommand("convert", "Map between grand-Dyck words and forests");
  convert_cmd->add_option("from", a.from, "word | forest")->required()->check(CLI::IsMember({"word", "forest"}));
  convert_cmd->add_option("to", a.to, "word | forest")->required()->check(CLI::IsMember({"word", "forest"}));
  convert_cmd->add_option("input", a.input, "Word or forest text")->required();

  auto* render_cmd = app.add_subcommand("render", "Draw a balanced word as ASCII mountains");
  render_cmd->add_option("word", a.input, "UD or parenthesis word")->required();

  auto* sample_cmd = app.add_subcommand("sample", "Draw uniform random forests with n edges");
  sample_cmd->add_option("n", a.n, "Number of edges")->required();
  sample_cmd->add_option("--seed", a.seed, "Generator seed (std::mt19937_64)");
  sample_cmd->add_option("--count", a.count, "Number of forests")->check(CLI::PositiveNumber);

  auto* oeis_cmd = app.add_subcommand("check-oeis", "Compare an OEIS b-file against the closed forms");
  oeis_cmd->add_option("id", a.sequence_id, "A001700 | A000108")->required();
  oeis_cmd->add_option("--bfile", a.bfile, "b-file path (defaults to the bundled fixture)");
  oeis_cmd->add_flag("--fetch", a.fetch, "Download the b-file from oeis.org");
  auto* oeis_limit = oeis_cmd->add_option("--limit", a.limit, "Check only the first N terms");
  oeis_cmd->add_option("--oeis-base", a.oeis_base)->group("");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run every brute-force cross-check up to --max-n");
  selftest_cmd->add_option("--max-n", a.max_n, "Largest size checked")->check(CLI::Range(std::uint64_t{0}, oracle::kMaxBruteN));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? code(ExitCode::Success) : code(ExitCode::InputError);
  }

  try {
    if (count_cmd->parsed() || enum_cmd->parsed()) {
      const bool has_height = count_cmd->parsed() ? count_height->count() > 0 : enum_height->count() > 0;
      if (has_height && a.kind != "forests") {
        err << "error: --height is only valid with forests\n";
        return code(ExitCode::InputError);
      }
      const auto height = has_height ? std::optional<std::uint64_t>(a.height) : std::nullopt;
      return count_cmd->parsed() ? cmd_count(a, height, out) : cmd_enumerate(a, height, out);
    }
    if (convert_cmd->parsed()) return cmd_convert(a, out);
    if (render_cmd->parsed()) {
      out << render_path(parse_word(a.input));
      return code(ExitCode::Success);
    }
    if (sample_cmd->parsed()) return cmd_sample(a, out);
    if (oeis_cmd->parsed()) return cmd_check_oeis(a, oeis_limit->count() > 0, out, err);
    if (selftest_cmd->parsed()) return cmd_selftest(a, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return code(ExitCode::InputError);
  }
  return code(ExitCode::InputError);
}

}  // namespace grandforest::cli
