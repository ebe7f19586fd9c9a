#pragma once

#include <cstdint>
#include <vector>

#include "dyadisc/dyadic.hpp"
#include "dyadisc/pointset.hpp"

namespace dyadisc {

/// Rectangular decomposition of [0,1]^2 along every point coordinate; the
/// counting part of the local discrepancy is constant on each open cell.
class CellGrid {
public:
  explicit CellGrid(const PointMultiset& points);

  /// Numerators over 2^resolution, strictly increasing, first 0 and last 2^resolution.
  const std::vector<BigInt>& x_breaks() const noexcept { return x_breaks_; }
  const std::vector<BigInt>& y_breaks() const noexcept { return y_breaks_; }
  int resolution() const noexcept { return resolution_; }
  std::size_t point_count() const noexcept { return point_count_; }

  std::size_t columns() const noexcept { return x_breaks_.size() - 1; }
  std::size_t rows() const noexcept { return y_breaks_.size() - 1; }

  /// Number of points z with z < t componentwise for t in the open cell (i, j).
  std::uint64_t count(std::size_t i, std::size_t j) const { return counts_[i * rows() + j]; }

private:
  int resolution_;
  std::size_t point_count_;
  std::vector<BigInt> x_breaks_;
  std::vector<BigInt> y_breaks_;
  std::vector<std::uint64_t> counts_;
};

/// D_P(t) = |P cap [0,t)| / N - t1 t2. Requires N to be a power of two.
DyadicRational local_discrepancy(const PointMultiset& points, const Point& t);

/// Integral of D_P^2 over [0,1]^2 by the Warnock pair-sum identity, in
/// O(N log N) via a sweep over the first coordinate.
Rational l2_warnock(const PointMultiset& points);

/// Integral of D_P^p over [0,1]^2 for even p >= 2 by exact cell-wise
/// integration. Throws std::invalid_argument for odd p.
Rational lp_exact_even(const PointMultiset& points, int p);

/// Supremum of |D_P| over the closed unit square. Requires N to be a power of two.
DyadicRational star_discrepancy(const PointMultiset& points);

struct NumericLpEstimate {
  /// Approximation of the integral of |D_P|^p.
  double integral_of_power = 0.0;
  /// (integral_of_power)^{1/p}
  double norm = 0.0;
  /// Midpoint samples per cell along each axis.
  int subdivisions = 0;
  std::size_t sample_count = 0;
};

/// Midpoint rule on the cell grid with each cell split into
/// subdivisions x subdivisions pieces; for any real p >= 1.
NumericLpEstimate lp_numeric(const PointMultiset& points, double p, int subdivisions = 16);

} // namespace dyadisc
