#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "grandforest/core.hpp"
#include "grandforest/oracle.hpp"

namespace grandforest::cli {

enum class ExitCode : int {
  Success = 0,
  InputError = 1,
  Mismatch = 2,
  IoError = 3,
};

/// One "index value" line of an OEIS b-file.
struct BFileEntry {
  std::int64_t index = 0;
  Count value;

  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

/// Malformed b-file content (bad number, non-increasing index).
class BFileError : public std::runtime_error {
 public:
  BFileError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Network or filesystem failure while obtaining a b-file.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Blank lines and lines starting with '#' are skipped.
std::vector<BFileEntry> parse_bfile(std::string_view text);

/// "/A001700/b001700.txt" for "A001700".
std::string bfile_path(std::string_view sequence_id);

/// GET <base><bfile_path(id)>. Throws IoError on any transport or HTTP failure.
std::string fetch_bfile(std::string_view sequence_id, const std::string& base_url = "https://oeis.org");

std::string read_file(const std::string& path);

/// Mountain drawing: step i sits on row min(l_i, l_{i+1}); rows run from
/// max level - 1 down to min level. Every line ends in LF, no trailing blanks.
std::string render_path(const GrandDyckPath& p);

ExitCode selftest_exit_code(const oracle::Report& report);

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grandforest::cli
