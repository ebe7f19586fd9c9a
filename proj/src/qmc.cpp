#include "dyadisc/qmc.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dyadisc/summation.hpp"

namespace dyadisc {

namespace mp = boost::multiprecision;

namespace {

void check_degree(int a, int b) {
  if (a < 0 || b < 0 || a > 8 || b > 8) {
    throw std::invalid_argument("polynomial integrand degrees must lie in [0, 8]");
  }
}

Integrand polynomial_integrand(PolynomialForm form, std::string name) {
  check_degree(form.a, form.b);
  Integrand f;
  f.name = std::move(name);
  f.polynomial = form;
  const int a = form.a;
  const int b = form.b;
  if (form.kind == PolynomialForm::Kind::ZeroBoundaryProduct) {
    f.evaluate = [a, b](double x, double y) { return std::pow(1.0 - x, a) * std::pow(1.0 - y, b); };
  } else {
    f.evaluate = [a, b](double x, double y) { return std::pow(x, a) * std::pow(y, b); };
  }
  f.exact_integral = Rational(1, (a + 1) * (b + 1));
  f.integral = 1.0 / ((a + 1.0) * (b + 1.0));
  return f;
}

DyadicRational dyadic_pow(const DyadicRational& base, int e) {
  DyadicRational out(1);
  for (int i = 0; i < e; ++i) {
    out *= base;
  }
  return out;
}

} // namespace

Integrand zero_boundary_product(int a, int b) {
  return polynomial_integrand({PolynomialForm::Kind::ZeroBoundaryProduct, a, b},
                              "one-minus:" + std::to_string(a) + "," + std::to_string(b));
}

Integrand monomial(int a, int b) {
  return polynomial_integrand({PolynomialForm::Kind::Monomial, a, b},
                              "monomial:" + std::to_string(a) + "," + std::to_string(b));
}

Integrand exp_sum() {
  Integrand f;
  f.name = "exp";
  f.evaluate = [](double x, double y) { return std::exp(x + y); };
  const double e1 = std::expm1(1.0);
  f.integral = e1 * e1;
  return f;
}

Integrand parse_integrand(const std::string& text) {
  if (text == "exp") {
    return exp_sum();
  }
  const auto colon = text.find(':');
  const auto comma = text.find(',');
  if (colon == std::string::npos || comma == std::string::npos || comma < colon) {
    throw std::invalid_argument("integrand must be 'one-minus:a,b', 'monomial:a,b' or 'exp', got '" + text + "'");
  }
  const std::string kind = text.substr(0, colon);
  int a = 0;
  int b = 0;
  try {
    a = std::stoi(text.substr(colon + 1, comma - colon - 1));
    b = std::stoi(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integrand degrees in '" + text + "'");
  }
  if (kind == "one-minus") {
    return zero_boundary_product(a, b);
  }
  if (kind == "monomial") {
    return monomial(a, b);
  }
  throw std::invalid_argument("unknown integrand kind '" + kind + "'");
}

double qmc_integrate(const PointMultiset& points, const Integrand& f) {
  if (points.empty()) {
    throw std::invalid_argument("qmc_integrate: empty point multiset");
  }
  if (f.polynomial) {
    return qmc_integrate_exact(points, f).convert_to<double>();
  }
  CompensatedSum sum;
  for (const auto& z : points) {
    sum.add(f.evaluate(z.x.to_double(), z.y.to_double()));
  }
  return sum.value() / static_cast<double>(points.size());
}

Rational qmc_integrate_exact(const PointMultiset& points, const Integrand& f) {
  if (points.empty()) {
    throw std::invalid_argument("qmc_integrate_exact: empty point multiset");
  }
  if (!f.polynomial) {
    throw std::invalid_argument("qmc_integrate_exact: integrand '" + f.name + "' has no exact form");
  }
  const auto& form = *f.polynomial;
  const DyadicRational one(1);
  DyadicRational sum;
  for (const auto& z : points) {
    if (form.kind == PolynomialForm::Kind::ZeroBoundaryProduct) {
      sum += dyadic_pow(one - z.x, form.a) * dyadic_pow(one - z.y, form.b);
    } else {
      sum += dyadic_pow(z.x, form.a) * dyadic_pow(z.y, form.b);
    }
  }
  return sum.to_rational() / Rational(BigInt(static_cast<std::uint64_t>(points.size())));
}

std::vector<ErrorRow> error_table(Family family, SignPreset preset, std::uint64_t seed, const Integrand& f,
                                  const std::vector<int>& n_values) {
  if (n_values.empty()) {
    throw std::invalid_argument("error_table: empty n range");
  }
  std::vector<ErrorRow> rows;
  rows.reserve(n_values.size());
  for (int n : n_values) {
    const auto points = make_family(family, n, make_sign_pattern(preset, n, seed));
    ErrorRow row;
    row.n = n;
    row.n_points = points.size();
    if (f.polynomial && f.exact_integral) {
      Rational err = qmc_integrate_exact(points, f) - *f.exact_integral;
      if (err < 0) {
        err = -err;
      }
      row.error = err.convert_to<double>();
      row.exact_error = err;
    } else {
      row.error = std::abs(qmc_integrate(points, f) - f.integral);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

RateFit fit_rate(const std::vector<ErrorRow>& rows) {
  RateFit fit;
  std::vector<double> xs;
  std::vector<double> ys;
  bool all_zero = !rows.empty();
  for (const auto& row : rows) {
    const bool zero = row.exact_error ? row.exact_error->is_zero() : row.error == 0.0;
    if (!zero) {
      all_zero = false;
      xs.push_back(std::log2(static_cast<double>(row.n_points)));
      ys.push_back(std::log2(row.error));
    }
  }
  if (all_zero) {
    fit.exact = true;
    fit.rows_used = rows.size();
    return fit;
  }
  if (xs.size() < 3) {
    throw std::invalid_argument("fit_rate: need at least 3 rows with nonzero error, got " +
                                std::to_string(xs.size()));
  }
  const double k = static_cast<double>(xs.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= k;
  mean_y /= k;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
  }
  if (sxx == 0.0) {
    throw std::invalid_argument("fit_rate: all rows share the same N");
  }
  fit.slope = sxy / sxx;
  double rss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (mean_y + fit.slope * (xs[i] - mean_x));
    rss += r * r;
  }
  fit.residual = std::sqrt(rss / k);
  fit.rows_used = xs.size();
  return fit;
}

} // namespace dyadisc
