#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dyadisc/haar.hpp"
#include "dyadisc/pointset.hpp"

namespace dyadisc {

struct CheckReport {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  /// First few failures, human readable.
  std::vector<std::string> failures;
  /// Free-form observations, e.g. the sign seen where only |mu| is predicted.
  std::map<std::string, std::string> notes;

  bool passed() const noexcept { return failed == 0; }
  void record(bool ok, const std::string& what);
  void merge(const CheckReport& other);
};

/// Every coefficient of D on the symmetrized set of R_n over levels
/// [-1, level_max]^2 against the signed predict_symmetrized, plus the
/// off-pattern count bound on the levels with j1 + j2 >= n - 1.
CheckReport verify_symmetrized(int n, const SignPattern& sigma, int level_max);

/// Davenport coefficients on (-1,-1) and (-1,k), k < n, every m.
CheckReport verify_davenport(int n, const SignPattern& sigma);

enum class ProductForm {
  /// 2^{n-j1-j2-2} + 2^{j1+j2-n} for every sign pattern, as usually quoted
  Unsigned,
  /// 2^{n-j1-j2-2} + T 2^{j1+j2-n} with T = counting_product_sign
  Signed,
};

/// Tent-weight counting sums of R_n on every box with j1 + j2 < n.
CheckReport verify_counting_sums(int n, const SignPattern& sigma, ProductForm form = ProductForm::Signed);

/// mu_discrepancy == oracle_mu on every index with j_i <= level_max.
CheckReport verify_oracle(const PointMultiset& points, int level_max);

/// mu_all_at_level agrees with mu_discrepancy on every index with j_i <= level_max.
CheckReport verify_level_consistency(const PointMultiset& points, int level_max);

/// Tent sums for every box of level (j1, j2), j1, j2 >= 0, indexed by m1 * 2^j2 + m2.
std::vector<CountingSums> counting_sums_at_level(const PointMultiset& points, int j1, int j2);

} // namespace dyadisc
