#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli/verify.hpp"
#include "lucky/numeric.hpp"

namespace lucky::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
};

// Bad flag values, resource caps, malformed input. Maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration above this needs --allow-big.
inline constexpr std::size_t kDefaultEnumerationCap = 7;
inline constexpr std::size_t kBigEnumerationCap = 9;
inline constexpr std::size_t kMaxSequenceN = 200;

enum class Format { kCsv, kJson };

struct TableRow {
  std::size_t n = 0;
  BigCount l_closed_form;
  BigCount a_total;
  ExactRational q_n;
  std::optional<BigCount> brute_force_l;
  std::optional<BigCount> quicksort_total;
};

struct TableOptions {
  std::size_t max_n = 8;
  Format format = Format::kCsv;
  bool allow_big = false;
  unsigned threads = 0;
};

std::vector<TableRow> build_table(const TableOptions& options);
void write_table(const std::vector<TableRow>& rows, Format format, std::ostream& out);

struct VerifyCommandOptions {
  std::size_t max_enum_n = 7;
  std::size_t max_seq_n = 100;
  bool allow_big = false;
  unsigned threads = 0;
};

struct EnumerateOptions {
  std::size_t n = 0;
  std::optional<std::size_t> lucky;
  bool pf_only = false;
  bool allow_big = false;
};

struct PolyOptions {
  std::size_t max_n = 7;
  Format format = Format::kCsv;
  bool allow_big = false;
  unsigned threads = 0;
};

// Each command writes its result to `out` and returns the process exit code.
// Argument problems throw UsageError.
int cmd_table(const TableOptions& options, std::ostream& out);
int cmd_verify(const VerifyCommandOptions& options, std::ostream& out);
int cmd_quicksort(const std::string& keys, bool trace, std::ostream& out);
int cmd_enumerate(const EnumerateOptions& options, std::ostream& out);
int cmd_poly(const PolyOptions& options, std::ostream& out);

// Parses "2,5,3" into keys; UsageError on anything else.
std::vector<std::int64_t> parse_keys(const std::string& text);

// Full command line entry point used by main() and the CLI tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lucky::cli
