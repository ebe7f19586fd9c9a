#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "dyadisc/haar.hpp"
#include "dyadisc/pointset.hpp"

namespace dyadisc {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Integrability p, fine index q (both in [1, inf]) and smoothness r.
struct BesovParams {
  double p = 2.0;
  double q = 2.0;
  double r = 0.0;
};

struct AdmissibilityReport {
  bool admissible = true;
  /// Empty when admissible.
  std::string violated;
};

/// Checks 1 <= p,q <= inf, 1/p - 1 < r < min(1/p, 1), and q > 1 when p = inf.
AdmissibilityReport validate(const BesovParams& params);

/// Per-level breakdown of the Haar-sequence quasi-norm.
struct LevelContribution {
  int j1;
  int j2;
  /// 2^{(j1+j2)(r-1/p+1)q} (sum_m |mu|^p)^{q/p} for q < inf; the unpowered
  /// 2^{(j1+j2)(r-1/p+1)} ||mu_j||_p for q = inf.
  double value;
};

struct NormBreakdown {
  double total = 0.0;
  double core_part = 0.0;
  double tail_part = 0.0;
  /// Levels in lexicographic (j1, j2) order.
  std::vector<LevelContribution> per_level;
  /// Largest level index included in the explicit sum.
  int j_max = 0;
};

/// Exact Haar coefficients of one point set for every level in
/// [-1, j_max]^2, computed once and reused across parameter choices.
class CoefficientTable {
public:
  CoefficientTable(const PointMultiset& points, int j_max);

  int j_max() const noexcept { return j_max_; }
  int resolution() const noexcept { return resolution_; }
  std::size_t point_count() const noexcept { return point_count_; }
  const LevelCoefficients& level(int j1, int j2) const;

private:
  int j_max_;
  int resolution_;
  std::size_t point_count_;
  std::vector<LevelCoefficients> levels_;
};

double level_term(const LevelCoefficients& level, const BesovParams& params);
double level_term(const PointMultiset& points, int j1, int j2, const BesovParams& params);

/// Explicit sum over levels up to resolution - 1 plus the closed-form
/// remainder, valid because every box on finer levels is empty.
NormBreakdown besov_norm_exact(const PointMultiset& points, const BesovParams& params);
/// `table` must cover at least [-1, resolution - 1].
NormBreakdown besov_norm_exact(const CoefficientTable& table, const BesovParams& params);

/// Explicit sum over -1 <= j1, j2 <= j_max, no tail.
NormBreakdown besov_norm_truncated(const PointMultiset& points, const BesovParams& params, int j_max);
NormBreakdown besov_norm_truncated(const CoefficientTable& table, const BesovParams& params, int j_max);

/// Closed-form sum of all level terms outside [-1, n-1]^2 for a set whose
/// boxes on those levels are all empty.
double besov_tail(int n, const BesovParams& params);

struct ScalingSample {
  double n_points;
  double norm;
};

struct ScalingRatio {
  double n_points;
  double ratio;
};

/// norm / (N^{r-1} (log2 N)^{1/q}); the log factor is 1 for q = inf.
std::vector<ScalingRatio> scaling_ratio(const std::vector<ScalingSample>& family, const BesovParams& params);

/// Reference rate N^{r-1} (log2 N)^{1/q}.
double besov_reference_rate(double n_points, const BesovParams& params);

} // namespace dyadisc
