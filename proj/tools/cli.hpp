#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dyadisc/besov.hpp"
#include "dyadisc/pointset.hpp"

namespace dyadisc::cli {

enum class Subcommand { Gen, Coeffs, Norm, Classic, Sweep, Verify, Qmc };
enum class OutputFormat { Csv, Json };
enum class NormMode { Exact, Truncated };

struct RunConfig {
  Subcommand subcommand = Subcommand::Gen;
  Family family = Family::Symmetrized;
  int n = 4;
  /// Upper end of the n range for sweep / verify / qmc; defaults to n.
  std::optional<int> n_max;
  SignPreset sigma = SignPreset::Identity;
  /// verify only: run every sign preset.
  bool all_presets = false;
  std::uint64_t seed = 7;
  /// Grids for sweep; the first entry is used by norm.
  std::vector<double> p{2.0};
  std::vector<double> q{2.0};
  std::vector<double> r{0.0};
  /// Level range for coeffs and truncated norms.
  std::optional<int> j_max;
  int j_min = -1;
  bool dense = false;
  NormMode mode = NormMode::Exact;
  /// classic: even integer for exact L_p, "inf" for the star discrepancy, other reals numeric.
  std::string classic_p = "2";
  std::string integrand = "one-minus:2,2";
  OutputFormat format = OutputFormat::Csv;
  std::string out_path;
};

/// Parses argv; throws std::invalid_argument with CLI11's message on error,
/// returns std::nullopt when help was printed.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& help_out);

/// Executes one configuration, writing the artifact to `out`. Returns the
/// process exit status (nonzero iff a verification check failed).
int run(const RunConfig& config, std::ostream& out);

} // namespace dyadisc::cli
