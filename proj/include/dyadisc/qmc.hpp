#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dyadisc/dyadic.hpp"
#include "dyadisc/pointset.hpp"

namespace dyadisc {

/// Polynomial integrands with rational integrals: (1-x)^a (1-y)^b or x^a y^b.
struct PolynomialForm {
  enum class Kind { ZeroBoundaryProduct, Monomial };
  Kind kind = Kind::Monomial;
  int a = 0;
  int b = 0;
};

struct Integrand {
  std::string name;
  std::function<double(double, double)> evaluate;
  /// Exact integral over the unit square when it is rational.
  std::optional<Rational> exact_integral;
  /// Reference value of the integral in double precision (always set).
  double integral = 0.0;
  /// Set for the built-in polynomial family; enables exact evaluation.
  std::optional<PolynomialForm> polynomial;
};

/// (1-x)^a (1-y)^b, 0 <= a, b <= 8.
Integrand zero_boundary_product(int a, int b);
/// x^a y^b, 0 <= a, b <= 8.
Integrand monomial(int a, int b);
/// exp(x + y), integral (e - 1)^2; no exact form.
Integrand exp_sum();

/// Parses "one-minus:a,b", "monomial:a,b" or "exp".
Integrand parse_integrand(const std::string& text);

/// Equal-weight average of f over the points, with multiplicity.
double qmc_integrate(const PointMultiset& points, const Integrand& f);

/// Exact equal-weight average for the polynomial family.
Rational qmc_integrate_exact(const PointMultiset& points, const Integrand& f);

struct ErrorRow {
  int n = 0;
  std::uint64_t n_points = 0;
  double error = 0.0;
  /// |Q_N - I| exactly, for polynomial integrands.
  std::optional<Rational> exact_error;
};

/// |Q_N - I| for the family built with the preset's sign pattern at each n.
std::vector<ErrorRow> error_table(Family family, SignPreset preset, std::uint64_t seed, const Integrand& f,
                                  const std::vector<int>& n_values);

struct RateFit {
  /// All errors were zero: the rule is exact and no slope is fitted.
  bool exact = false;
  double slope = 0.0;
  /// Root-mean-square residual of the fit in log2 units.
  double residual = 0.0;
  std::size_t rows_used = 0;
};

/// Least-squares slope of log2(error) against log2(N) over rows with
/// nonzero error. Throws std::invalid_argument if fewer than 3 such rows
/// exist and not all errors are zero.
RateFit fit_rate(const std::vector<ErrorRow>& rows);

} // namespace dyadisc
