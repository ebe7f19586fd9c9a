#include "dyadisc/haar.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace dyadisc {

namespace {

constexpr int kMaxFastResolution = 48;

void check_level(int j) {
  if (j < -1 || j > 4000) {
    throw std::invalid_argument("Haar level out of range: " + std::to_string(j));
  }
}

void check_m(int j, std::uint64_t m) {
  check_level(j);
  if (j == -1) {
    if (m != 0) {
      throw std::invalid_argument("m must be 0 for j = -1");
    }
  } else if (j < 64 && m >= (std::uint64_t{1} << j)) {
    throw std::invalid_argument("m = " + std::to_string(m) + " out of range for j = " +
                                std::to_string(j));
  }
}

/// m * 2^-j as a dyadic.
DyadicRational grid_point(std::uint64_t m, int j) { return DyadicRational(BigInt(m), j); }

int axis_sign(int j, std::uint64_t m, const DyadicRational& t) {
  if (j == -1) {
    return 1;
  }
  const DyadicRational left = grid_point(m, j);
  const DyadicRational mid = grid_point(2 * m + 1, j + 1);
  const DyadicRational right = grid_point(m + 1, j);
  if (t < left || t >= right) {
    return 0;
  }
  return t < mid ? 1 : -1;
}

bool strictly_inside(int j, std::uint64_t m, const DyadicRational& z) {
  return grid_point(m, j) < z && z < grid_point(m + 1, j);
}

bool in_half_open(int j, std::uint64_t m, const DyadicRational& z) {
  return grid_point(m, j) <= z && z < grid_point(m + 1, j);
}

/// 1 - |2m + 1 - 2^{j+1} z|
DyadicRational tent(int j, std::uint64_t m, const DyadicRational& z) {
  const DyadicRational inner = DyadicRational(BigInt(2 * m + 1), 0) - z.scaled_by_pow2(-(j + 1));
  return DyadicRational(1) - inner.abs();
}

} // namespace

void HaarIndex::validate() const {
  check_m(j1, m1);
  check_m(j2, m2);
}

int haar_eval(const HaarIndex& idx, const Point& t) {
  idx.validate();
  const DyadicRational zero;
  const DyadicRational one(1);
  if (t.x < zero || t.x >= one || t.y < zero || t.y >= one) {
    throw std::domain_error("haar_eval: argument outside [0,1)^2");
  }
  return axis_sign(idx.j1, idx.m1, t.x) * axis_sign(idx.j2, idx.m2, t.y);
}

DyadicRational mu_volume(int j1, int j2) {
  check_level(j1);
  check_level(j2);
  if (j1 >= 0 && j2 >= 0) {
    return DyadicRational::pow2(2 * (j1 + j2 + 2));
  }
  if (j1 == -1 && j2 == -1) {
    return DyadicRational::pow2(2);
  }
  const int k = std::max(j1, j2);
  return -DyadicRational::pow2(2 * k + 3);
}

DyadicRational mu_volume(const HaarIndex& idx) {
  idx.validate();
  return mu_volume(idx.j1, idx.j2);
}

DyadicRational axis_factor(int j, std::uint64_t m, const DyadicRational& z) {
  check_m(j, m);
  if (j == -1) {
    return DyadicRational(1) - z;
  }
  if (!strictly_inside(j, m, z)) {
    return {};
  }
  return -tent(j, m, z).scaled_by_pow2(j + 1);
}

DyadicRational mu_point(const HaarIndex& idx, const Point& z) {
  idx.validate();
  DyadicRational fx = axis_factor(idx.j1, idx.m1, z.x);
  if (fx.is_zero()) {
    return fx;
  }
  return fx * axis_factor(idx.j2, idx.m2, z.y);
}

DyadicRational mu_discrepancy(const PointMultiset& points, const HaarIndex& idx) {
  if (points.empty()) {
    throw std::invalid_argument("mu_discrepancy: empty point multiset");
  }
  idx.validate();
  DyadicRational sum;
  for (const auto& z : points) {
    sum += mu_point(idx, z);
  }
  return divide_by_power_of_two_count(sum, points.size()) - mu_volume(idx);
}

DyadicRational LevelCoefficients::at(std::uint64_t m1, std::uint64_t m2) const {
  const auto key = std::make_pair(m1, m2);
  const auto it = std::lower_bound(occupied.begin(), occupied.end(), key,
                                   [](const auto& entry, const auto& k) { return entry.first < k; });
  if (it != occupied.end() && it->first == key) {
    return it->second;
  }
  return empty_value;
}

namespace {

// On the 2^-res grid, with z = X / 2^res, the axis factor equals
//   j = -1:  (2^res - X) / 2^res
//   j >= 0:  -A / 2^res,  A = 2^s - |(2m+1) 2^s - X|,  s = res - j - 1,
// and it vanishes unless X is strictly inside (m 2^{s+1}, (m+1) 2^{s+1}).
struct AxisContribution {
  bool active = false;
  std::uint64_t m = 0;
  __int128 numerator = 0;
};

AxisContribution axis_contribution(int j, int res, std::uint64_t x) {
  AxisContribution out;
  const std::uint64_t one = std::uint64_t{1} << res;
  if (j == -1) {
    out.active = x < one;
    out.numerator = static_cast<__int128>(one - x);
    return out;
  }
  if (j >= res) {
    return out;
  }
  const int width_bits = res - j;
  const std::uint64_t mask = (std::uint64_t{1} << width_bits) - 1;
  if ((x & mask) == 0 || x >= one) {
    return out;
  }
  out.active = true;
  out.m = x >> width_bits;
  const auto half = static_cast<std::int64_t>(std::uint64_t{1} << (width_bits - 1));
  const auto centre = static_cast<std::int64_t>((2 * out.m + 1) << (width_bits - 1));
  const std::int64_t offset = centre - static_cast<std::int64_t>(x);
  out.numerator = -static_cast<__int128>(half - (offset < 0 ? -offset : offset));
  return out;
}

BigInt to_bigint(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  BigInt out = static_cast<std::uint64_t>(u >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(u);
  return negative ? BigInt(-out) : out;
}

} // namespace

LevelCoefficients mu_all_at_level(const PointMultiset& points, int j1, int j2) {
  if (points.empty()) {
    throw std::invalid_argument("mu_all_at_level: empty point multiset");
  }
  check_level(j1);
  check_level(j2);
  const int res = points.resolution();
  if (res > kMaxFastResolution) {
    throw std::invalid_argument("mu_all_at_level: resolution above 2^-48 is not supported");
  }
  const int log2_n = exact_log2(points.size());
  if (log2_n < 0) {
    throw std::domain_error("mu_all_at_level: point count must be a power of two");
  }

  LevelCoefficients level;
  level.j1 = j1;
  level.j2 = j2;
  const DyadicRational volume = mu_volume(j1, j2);
  level.empty_value = -volume;

  std::map<std::pair<std::uint64_t, std::uint64_t>, __int128> sums;
  for (const auto& z : points) {
    const auto cx = axis_contribution(j1, res, z.x.numerator_at(res).convert_to<std::uint64_t>());
    if (!cx.active) {
      continue;
    }
    const auto cy = axis_contribution(j2, res, z.y.numerator_at(res).convert_to<std::uint64_t>());
    if (!cy.active) {
      continue;
    }
    sums[{cx.m, cy.m}] += cx.numerator * cy.numerator;
  }
  level.occupied.reserve(sums.size());
  for (const auto& [m, sum] : sums) {
    // sum / (N 2^{2 res}) - volume
    DyadicRational value = DyadicRational(to_bigint(sum), 2 * static_cast<std::int64_t>(res) + log2_n);
    level.occupied.emplace_back(m, value - volume);
  }
  return level;
}

bool CoefficientPrediction::satisfied_by(const DyadicRational& coefficient) const {
  switch (kind) {
  case Kind::ExactValue:
    return coefficient == value;
  case Kind::ExactAbs:
    return coefficient.abs() == value;
  case Kind::AbsUpperBound:
    return coefficient.abs() <= value;
  }
  return false;
}

CoefficientPrediction predict_symmetrized(int n, const HaarIndex& idx) {
  if (n < 1) {
    throw std::invalid_argument("predict_symmetrized: n must be >= 1");
  }
  idx.validate();
  using Kind = CoefficientPrediction::Kind;
  const int j1 = idx.j1;
  const int j2 = idx.j2;
  if (j1 == -1 && j2 == -1) {
    return {Kind::ExactValue, DyadicRational(), 6};
  }
  if (j1 == -1 || j2 == -1) {
    const int k = std::max(j1, j2);
    if (k < n) {
      return {Kind::ExactValue, DyadicRational(), 4};
    }
    return {Kind::ExactAbs, DyadicRational::pow2(2 * k + 3), 5};
  }
  // case 3 takes precedence where it overlaps case 2 at j_i = n.
  if (j1 >= n || j2 >= n) {
    return {Kind::ExactAbs, DyadicRational::pow2(2 * (j1 + j2 + 2)), 3};
  }
  if (j1 + j2 < n - 1) {
    return {Kind::ExactAbs, DyadicRational::pow2(2 * (n + 1)), 1};
  }
  return {Kind::AbsUpperBound, DyadicRational::pow2(n + j1 + j2), 2};
}

CoefficientPrediction predict_symmetrized(int n, const SignPattern& sigma, const HaarIndex& idx) {
  if (sigma.size() != n) {
    throw std::invalid_argument("predict_symmetrized: sign pattern length must equal n");
  }
  auto prediction = predict_symmetrized(n, idx);
  if (prediction.case_number == 1) {
    prediction.kind = CoefficientPrediction::Kind::ExactValue;
    if (counting_product_sign(sigma, idx.j1, idx.j2) < 0) {
      prediction.value = -prediction.value;
    }
  }
  return prediction;
}

CoefficientPrediction predict_davenport(int n, const SignPattern& sigma, const HaarIndex& idx) {
  if (n < 1 || sigma.size() != n) {
    throw std::invalid_argument("predict_davenport: sign pattern length must equal n >= 1");
  }
  idx.validate();
  using Kind = CoefficientPrediction::Kind;
  if (idx.j1 == -1 && idx.j2 == -1) {
    return {Kind::ExactValue, DyadicRational::pow2(n + 2), 0};
  }
  if (idx.j1 == -1 && idx.j2 >= 0 && idx.j2 < n) {
    const int k = idx.j2;
    const DyadicRational correction = DyadicRational::pow2(2 * n + 2);
    const DyadicRational t_term = sigma.flipped(k + 1) ? -correction : correction;
    return {Kind::ExactValue, -DyadicRational::pow2(n + 2 * k + 3) + t_term, 0};
  }
  throw std::invalid_argument("predict_davenport: only j = (-1,-1) and (-1,k), k < n, are covered");
}

CountingSums counting_sums(const PointMultiset& points, int j1, int j2, std::uint64_t m1,
                          std::uint64_t m2) {
  if (j1 < 0 || j2 < 0) {
    throw std::invalid_argument("counting_sums: j1, j2 must be >= 0");
  }
  check_m(j1, m1);
  check_m(j2, m2);
  CountingSums out;
  for (const auto& z : points) {
    if (!in_half_open(j1, m1, z.x) || !in_half_open(j2, m2, z.y)) {
      continue;
    }
    const DyadicRational wx = strictly_inside(j1, m1, z.x) ? tent(j1, m1, z.x) : DyadicRational();
    const DyadicRational wy = strictly_inside(j2, m2, z.y) ? tent(j2, m2, z.y) : DyadicRational();
    out.single_x += wx;
    out.single_y += wy;
    out.product += wx * wy;
  }
  return out;
}

int counting_product_sign(const SignPattern& sigma, int j1, int j2) {
  const int n = sigma.size();
  if (j1 < 0 || j2 < 0 || j1 + j2 >= n) {
    throw std::invalid_argument("counting_product_sign: need j1, j2 >= 0 and j1 + j2 < n");
  }
  return sigma.flipped(j2 + 1) == sigma.flipped(n - j1) ? 1 : -1;
}

CountingSums counting_sums_prediction(const SignPattern& sigma, int j1, int j2) {
  const int n = sigma.size();
  const int sign = counting_product_sign(sigma, j1, j2);
  CountingSums out;
  out.single_x = DyadicRational::pow2(-(n - j1 - j2 - 1));
  out.single_y = out.single_x;
  const DyadicRational correction = DyadicRational::pow2(n - j1 - j2);
  out.product = DyadicRational::pow2(-(n - j1 - j2 - 2)) + (sign > 0 ? correction : -correction);
  return out;
}

namespace {

// H(u) = integral of h_{j,m} over [0,u], as an explicit piecewise-linear function.
DyadicRational haar_antiderivative(int j, std::uint64_t m, const DyadicRational& u) {
  if (j == -1) {
    return u;
  }
  const DyadicRational a = grid_point(m, j);
  const DyadicRational c = grid_point(2 * m + 1, j + 1);
  const DyadicRational b = grid_point(m + 1, j);
  if (u <= a || u >= b) {
    return {};
  }
  if (u <= c) {
    return u - a;
  }
  return (c - a) - (u - c);
}

// G(u) = integral of t h_{j,m}(t) over [0,u]; only G(1) is needed.
DyadicRational first_moment(int j, std::uint64_t m) {
  const DyadicRational half = DyadicRational::pow2(1);
  if (j == -1) {
    return half;
  }
  const DyadicRational a = grid_point(m, j);
  const DyadicRational c = grid_point(2 * m + 1, j + 1);
  const DyadicRational b = grid_point(m + 1, j);
  return (c * c - a * a) * half - (b * b - c * c) * half;
}

} // namespace

DyadicRational oracle_mu(const PointMultiset& points, const HaarIndex& idx) {
  if (points.empty()) {
    throw std::invalid_argument("oracle_mu: empty point multiset");
  }
  idx.validate();
  const DyadicRational one(1);
  const DyadicRational hx1 = haar_antiderivative(idx.j1, idx.m1, one);
  const DyadicRational hy1 = haar_antiderivative(idx.j2, idx.m2, one);
  DyadicRational sum;
  for (const auto& z : points) {
    const DyadicRational fx = hx1 - haar_antiderivative(idx.j1, idx.m1, z.x);
    const DyadicRational fy = hy1 - haar_antiderivative(idx.j2, idx.m2, z.y);
    sum += fx * fy;
  }
  const DyadicRational volume = first_moment(idx.j1, idx.m1) * first_moment(idx.j2, idx.m2);
  return divide_by_power_of_two_count(sum, points.size()) - volume;
}

} // namespace dyadisc
