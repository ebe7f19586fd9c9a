#include "dyadisc/besov.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dyadisc/parallel.hpp"
#include "dyadisc/summation.hpp"

namespace dyadisc {

namespace {

double inverse(double v) { return std::isinf(v) ? 0.0 : 1.0 / v; }

void require_admissible(const BesovParams& params) {
  const auto report = validate(params);
  if (!report.admissible) {
    throw std::invalid_argument("inadmissible Besov parameters: " + report.violated);
  }
}

/// 2^{(j1+j2)(r - 1/p + 1)}, the per-level weight before raising to q.
double level_weight_exponent(int j1, int j2, const BesovParams& params) {
  return static_cast<double>(j1 + j2) * (params.r - inverse(params.p) + 1.0);
}

} // namespace

AdmissibilityReport validate(const BesovParams& params) {
  auto fail = [](std::string why) { return AdmissibilityReport{false, std::move(why)}; };
  if (std::isnan(params.p) || std::isnan(params.q) || std::isnan(params.r)) {
    return fail("parameters must not be NaN");
  }
  if (params.p < 1.0) {
    return fail("p >= 1 required");
  }
  if (params.q < 1.0) {
    return fail("q >= 1 required");
  }
  if (!std::isfinite(params.r)) {
    return fail("r must be finite");
  }
  const double inv_p = inverse(params.p);
  if (!(params.r > inv_p - 1.0)) {
    std::ostringstream os;
    os << "r > 1/p - 1 = " << inv_p - 1.0 << " required";
    return fail(os.str());
  }
  if (!(params.r < std::min(inv_p, 1.0))) {
    std::ostringstream os;
    if (inv_p < 1.0) {
      os << "r < 1/p = " << inv_p << " required";
    } else {
      os << "r < 1 required";
    }
    return fail(os.str());
  }
  if (std::isinf(params.p) && params.q <= 1.0) {
    return fail("q > 1 required when p = inf");
  }
  return {};
}

CoefficientTable::CoefficientTable(const PointMultiset& points, int j_max)
    : j_max_(j_max), resolution_(points.resolution()), point_count_(points.size()) {
  if (j_max < -1) {
    throw std::invalid_argument("CoefficientTable: j_max must be >= -1");
  }
  const auto side = static_cast<std::size_t>(j_max + 2);
  levels_.resize(side * side);
  parallel_for(levels_.size(), [&](std::size_t i) {
    const int j1 = static_cast<int>(i / side) - 1;
    const int j2 = static_cast<int>(i % side) - 1;
    levels_[i] = mu_all_at_level(points, j1, j2);
  });
}

const LevelCoefficients& CoefficientTable::level(int j1, int j2) const {
  if (j1 < -1 || j2 < -1 || j1 > j_max_ || j2 > j_max_) {
    throw std::out_of_range("CoefficientTable: level outside the computed range");
  }
  const auto side = static_cast<std::size_t>(j_max_ + 2);
  return levels_[static_cast<std::size_t>(j1 + 1) * side + static_cast<std::size_t>(j2 + 1)];
}

double level_term(const LevelCoefficients& level, const BesovParams& params) {
  const double empty_abs = level.empty_value.abs().to_double();
  const double empty_count =
      std::ldexp(1.0, level.log2_box_count()) - static_cast<double>(level.occupied.size());
  double log2_norm = 0.0; // log2 of ||mu_j||_p
  if (std::isinf(params.p)) {
    double peak = empty_count > 0.0 ? empty_abs : 0.0;
    for (const auto& entry : level.occupied) {
      peak = std::max(peak, entry.second.abs().to_double());
    }
    if (peak == 0.0) {
      return 0.0;
    }
    log2_norm = std::log2(peak);
  } else {
    CompensatedSum sum;
    for (const auto& entry : level.occupied) {
      sum.add(std::pow(entry.second.abs().to_double(), params.p));
    }
    if (empty_count > 0.0 && empty_abs > 0.0) {
      sum.add(std::exp2(std::log2(empty_count) + params.p * std::log2(empty_abs)));
    }
    const double total = sum.value();
    if (total <= 0.0) {
      return 0.0;
    }
    log2_norm = std::log2(total) / params.p;
  }
  const double log2_value = level_weight_exponent(level.j1, level.j2, params) + log2_norm;
  if (std::isinf(params.q)) {
    return std::exp2(log2_value);
  }
  return std::exp2(params.q * log2_value);
}

double level_term(const PointMultiset& points, int j1, int j2, const BesovParams& params) {
  require_admissible(params);
  return level_term(mu_all_at_level(points, j1, j2), params);
}

double besov_tail(int n, const BesovParams& params) {
  require_admissible(params);
  if (n < 0) {
    throw std::invalid_argument("besov_tail: n must be >= 0");
  }
  const double a = params.r - inverse(params.p) + 1.0;
  const double decay = params.r - 1.0; // log2 of the per-index ratio before raising to q
  if (std::isinf(params.q)) {
    // Both regions decrease in the level index, so the sup sits at index n.
    const double square_region = std::exp2(-4.0 + decay * n);
    const double rows = std::exp2(-a - 3.0 + decay * n);
    return std::max(square_region, rows);
  }
  const double q = params.q;
  const double log_x = q * decay * std::log(2.0);
  const double one_minus_x = -std::expm1(log_x);
  const double x_n = std::exp(log_x * n);
  // sum over j in N_0^2 \ [0,n-1]^2 of 2^{-4q} x^{j1+j2}
  const double square_region = std::exp2(-4.0 * q) * x_n * (2.0 - x_n) / (one_minus_x * one_minus_x);
  // rows (-1,k) and (k,-1), k >= n: 2^{-(a+3)q} x^k each
  const double rows = 2.0 * std::exp2(-(a + 3.0) * q) * x_n / one_minus_x;
  return square_region + rows;
}

namespace {

NormBreakdown assemble(const CoefficientTable& table, const BesovParams& params, int explicit_max,
                       double tail_terms) {
  NormBreakdown out;
  out.j_max = explicit_max;
  const bool sup = std::isinf(params.q);
  CompensatedSum core_sum;
  double core_max = 0.0;
  out.per_level.reserve(static_cast<std::size_t>((explicit_max + 2) * (explicit_max + 2)));
  for (int j1 = -1; j1 <= explicit_max; ++j1) {
    for (int j2 = -1; j2 <= explicit_max; ++j2) {
      const double term = level_term(table.level(j1, j2), params);
      out.per_level.push_back({j1, j2, term});
      core_sum.add(term);
      core_max = std::max(core_max, term);
    }
  }
  if (sup) {
    out.core_part = core_max;
    out.tail_part = tail_terms;
    out.total = std::max(core_max, tail_terms);
  } else {
    const double inv_q = 1.0 / params.q;
    const double core = core_sum.value();
    out.core_part = std::pow(core, inv_q);
    out.tail_part = std::pow(tail_terms, inv_q);
    out.total = std::pow(core + tail_terms, inv_q);
  }
  return out;
}

} // namespace

NormBreakdown besov_norm_exact(const CoefficientTable& table, const BesovParams& params) {
  require_admissible(params);
  const int n = table.resolution();
  if (table.j_max() < n - 1) {
    throw std::invalid_argument("besov_norm_exact: coefficient table does not reach the resolution");
  }
  return assemble(table, params, n - 1, besov_tail(n, params));
}

NormBreakdown besov_norm_exact(const PointMultiset& points, const BesovParams& params) {
  require_admissible(params);
  return besov_norm_exact(CoefficientTable(points, points.resolution() - 1), params);
}

NormBreakdown besov_norm_truncated(const CoefficientTable& table, const BesovParams& params, int j_max) {
  require_admissible(params);
  if (j_max < 0) {
    throw std::invalid_argument("besov_norm_truncated: j_max must be >= 0");
  }
  if (table.j_max() < j_max) {
    throw std::invalid_argument("besov_norm_truncated: coefficient table too small");
  }
  return assemble(table, params, j_max, 0.0);
}

NormBreakdown besov_norm_truncated(const PointMultiset& points, const BesovParams& params, int j_max) {
  require_admissible(params);
  if (j_max < 0) {
    throw std::invalid_argument("besov_norm_truncated: j_max must be >= 0");
  }
  return besov_norm_truncated(CoefficientTable(points, j_max), params, j_max);
}

double besov_reference_rate(double n_points, const BesovParams& params) {
  const double log_factor = std::isinf(params.q) ? 1.0 : std::pow(std::log2(n_points), 1.0 / params.q);
  return std::pow(n_points, params.r - 1.0) * log_factor;
}

std::vector<ScalingRatio> scaling_ratio(const std::vector<ScalingSample>& family, const BesovParams& params) {
  std::vector<ScalingRatio> out;
  out.reserve(family.size());
  for (const auto& sample : family) {
    if (!(sample.n_points >= 2.0)) {
      throw std::invalid_argument("scaling_ratio: N >= 2 required");
    }
    out.push_back({sample.n_points, sample.norm / besov_reference_rate(sample.n_points, params)});
  }
  return out;
}

} // namespace dyadisc
