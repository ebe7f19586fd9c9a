#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dyadisc/dyadic.hpp"
#include "dyadisc/pointset.hpp"

namespace dyadisc {

/// Names one tensor Haar function h_{j,m}; j_i >= -1, m_i in D_{j_i}.
struct HaarIndex {
  int j1 = -1;
  int j2 = -1;
  std::uint64_t m1 = 0;
  std::uint64_t m2 = 0;

  /// Throws std::invalid_argument when m is out of range for j.
  void validate() const;

  friend bool operator==(const HaarIndex&, const HaarIndex&) = default;
};

/// h_{j1,m1}(t1) * h_{j2,m2}(t2). Throws std::domain_error for t outside [0,1)^2.
int haar_eval(const HaarIndex& idx, const Point& t);

/// Haar coefficient of t1*t2.
DyadicRational mu_volume(const HaarIndex& idx);
DyadicRational mu_volume(int j1, int j2);

/// Integral of h_{j,m} over [z,1].
DyadicRational axis_factor(int j, std::uint64_t m, const DyadicRational& z);

/// Haar coefficient of t -> 1_{[0,t)}(z).
DyadicRational mu_point(const HaarIndex& idx, const Point& z);

/// Haar coefficient of the local discrepancy of P. Requires |P| to be a
/// power of two so the result stays dyadic.
DyadicRational mu_discrepancy(const PointMultiset& points, const HaarIndex& idx);

/// All coefficients on one level (j1, j2), stored sparsely: boxes holding at
/// least one point strictly inside carry their own value, every other box
/// shares `empty_value`.
struct LevelCoefficients {
  int j1 = -1;
  int j2 = -1;
  /// Sorted by (m1, m2).
  std::vector<std::pair<std::pair<std::uint64_t, std::uint64_t>, DyadicRational>> occupied;
  DyadicRational empty_value;

  /// log2 of |D_j1 x D_j2|.
  int log2_box_count() const noexcept { return std::max(j1, 0) + std::max(j2, 0); }
  /// Coefficient at (m1, m2).
  DyadicRational at(std::uint64_t m1, std::uint64_t m2) const;
};

LevelCoefficients mu_all_at_level(const PointMultiset& points, int j1, int j2);

/// Which statement of the coefficient classification a prediction comes from.
struct CoefficientPrediction {
  enum class Kind { ExactValue, ExactAbs, AbsUpperBound };

  Kind kind = Kind::ExactValue;
  DyadicRational value;
  /// 1..6 for the symmetrized classification, 0 for the Davenport formulas.
  int case_number = 0;

  bool satisfied_by(const DyadicRational& coefficient) const;
};

/// Predicted coefficient of D for the symmetrized set of R_n, by case:
///   1: j1, j2 >= 0, j1 + j2 < n - 1      |mu| = 2^{-2(n+1)}
///   2: 0 <= j1, j2 < n, j1 + j2 >= n - 1 |mu| <= 2^{-(n+j1+j2)}
///   3: j1 >= n or j2 >= n (both >= 0)    |mu| = 2^{-2(j1+j2+2)}
///   4: one index -1, the other k < n     mu = 0
///   5: one index -1, the other k >= n    |mu| = 2^{-(2k+3)}
///   6: j = (-1,-1)                       mu = 0
/// Case 1 is only fixed up to sign here; the sign depends on the sign pattern.
CoefficientPrediction predict_symmetrized(int n, const HaarIndex& idx);

/// As above, with case 1 resolved to its exact signed value
/// counting_product_sign(sigma, j1, j2) * 2^{-2(n+1)}.
CoefficientPrediction predict_symmetrized(int n, const SignPattern& sigma, const HaarIndex& idx);

/// Predicted coefficient of D for R_n u reflect(R_n, Y). Defined only for
/// j = (-1,-1) and j = (-1,k) with 0 <= k < n; throws std::invalid_argument otherwise.
CoefficientPrediction predict_davenport(int n, const SignPattern& sigma, const HaarIndex& idx);

struct CountingSums {
  DyadicRational single_x;
  DyadicRational single_y;
  DyadicRational product;
};

/// Sums of the tent weights (1 - |2m_i + 1 - 2^{j_i+1} z_i|) over points in the
/// half-open box [m1, m1+1) 2^-j1 x [m2, m2+1) 2^-j2; j1, j2 >= 0. The tent
/// vanishes on the box edges, so only the single sums see the lower edges.
CountingSums counting_sums(const PointMultiset& points, int j1, int j2, std::uint64_t m1,
                          std::uint64_t m2);

/// Sign T in the product sum 2^{n-j1-j2-2} + T 2^{j1+j2-n} for R_n:
/// +1 when positions j2+1 and n-j1 of sigma agree, -1 otherwise.
int counting_product_sign(const SignPattern& sigma, int j1, int j2);

/// Closed forms of the counting sums for R_n (product only meaningful for j1+j2 < n-1).
CountingSums counting_sums_prediction(const SignPattern& sigma, int j1, int j2);

/// Same value as mu_discrepancy, computed from explicit piecewise
/// antiderivatives of the one-dimensional Haar functions.
DyadicRational oracle_mu(const PointMultiset& points, const HaarIndex& idx);

} // namespace dyadisc
