#pragma once

// Command-line front end: argument parsing, dispatch and CSV reports.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reexp/hilbert.hpp"
#include "reexp/reexpand.hpp"
#include "reexp/seqcore.hpp"
#include "reexp/weyl.hpp"

namespace reexp::cli {

/// Bad invocation; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Subcommand { hilbert, reexpand, sufficiency, su2, bench };
enum class Su2Op { q1, q2, table, sufficiency, character, telescoping };

struct CliInvocation {
  Subcommand subcommand = Subcommand::hilbert;
  std::optional<std::filesystem::path> input_path;
  std::optional<std::filesystem::path> output_path;
  std::optional<CoeffND> input;  // loaded and validated during parsing

  std::optional<std::string> kind;  // a HilbertKind name, or "mixed"
  IndexBox range;
  std::optional<ParityVector> parity;
  std::optional<WeightExponent> weight;
  bool subtract_mean = false;
  double boundary_tol = 1e-10;
  Algorithm algorithm = Algorithm::fast;
  std::vector<Index> windows;
  std::vector<Index> sizes;
  Su2Op op = Su2Op::q1;
  HighestWeightSU2 lmax{0};
  CoeffMode mode = CoeffMode::character;
  DenomConvention convention = DenomConvention::nonnegative;
  bool no_timing = false;
  std::optional<std::string> help;  // set when --help was requested
};

/// argv without the program name. Throws UsageError naming the offending
/// flag; unknown flags are errors.
CliInvocation parse_args(const std::vector<std::string>& args);

/// Executes the invocation. Returns 0 on success, 2 on usage errors detected
/// at dispatch, 1 on computation errors (message written to `err`).
int run(const CliInvocation& inv, std::ostream& out, std::ostream& err);

/// Parses "2", "2.5" or "5/2" as a half-integer highest weight.
HighestWeightSU2 parse_half_integer(const std::string& text);
/// Per-axis ranges "lo:hi,lo:hi".
IndexBox parse_box(const std::string& text);
std::vector<Index> parse_index_list(const std::string& text);

struct BenchRow {
  HilbertKind kind = HilbertKind::full;
  Index n = 0;
  double naive_median = 0.0, naive_min = 0.0, naive_max = 0.0;  // seconds
  double fast_median = 0.0, fast_min = 0.0, fast_max = 0.0;
  double max_deviation = 0.0;  // relative l-infinity, fast vs naive
};

/// Median of 5 timed runs after 1 warmup per evaluator, on a seeded random
/// sequence with support [1, n] and output window [1, n].
BenchRow bench_kind(HilbertKind kind, Index n);

std::string report_csv(const SummabilityReport& report);
std::string report_csv(const CentralCoeffTable& table);
std::string report_csv(const std::vector<BenchRow>& rows);

void emit_report(const SummabilityReport& report, const std::filesystem::path& path);
void emit_report(const CentralCoeffTable& table, const std::filesystem::path& path);
void emit_report(const std::vector<BenchRow>& rows, const std::filesystem::path& path);

}  // namespace reexp::cli
