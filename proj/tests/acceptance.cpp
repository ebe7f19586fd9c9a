// Acceptance suite: one [PASS]/[FAIL] line per criterion.
// Usage: acceptance [criterion]   (no argument runs all ten)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dyadisc/besov.hpp"
#include "dyadisc/classical.hpp"
#include "dyadisc/qmc.hpp"
#include "dyadisc/verification.hpp"

using namespace dyadisc;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  std::function<Verdict()> check;
};

std::vector<SignPattern> presets(int n) {
  return {SignPattern::identity(n), SignPattern::all_flip(n), SignPattern::alternating(n),
          SignPattern::seeded_random(n, 7)};
}

const std::vector<Family> kFamilies{Family::Hammersley, Family::Davenport, Family::Symmetrized};

std::string first_failure(const CheckReport& report) {
  return report.failures.empty() ? std::string() : " first failure: " + report.failures.front();
}

std::string counts(const CheckReport& report) {
  return std::to_string(report.checked) + " checks, " + std::to_string(report.failed) + " failed";
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

std::string param_name(const BesovParams& params) {
  auto one = [](double v) { return std::isinf(v) ? std::string("inf") : fmt(v); };
  return "(p=" + one(params.p) + ",q=" + one(params.q) + ",r=" + one(params.r) + ")";
}

// (p,q) in {(1,2),(2,2),(2,inf),(inf,2)} x r in {-0.4,-0.2,0,0.2}, admissible only.
std::vector<BesovParams> criterion5_grid() {
  std::vector<BesovParams> out;
  const std::vector<std::pair<double, double>> pq{{1, 2}, {2, 2}, {2, kInfinity}, {kInfinity, 2}};
  for (const auto& [p, q] : pq) {
    for (const double r : {-0.4, -0.2, 0.0, 0.2}) {
      const BesovParams params{p, q, r};
      if (validate(params).admissible) {
        out.push_back(params);
      }
    }
  }
  return out;
}

double spread(const std::vector<double>& values) {
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return *hi / *lo;
}

// Besov ratios norm / (N^{r-1} (log2 N)^{1/q}) for one family, n in [lo, hi];
// `preset` indexes presets().
std::vector<std::vector<double>> besov_ratios(Family family, std::size_t preset, int lo, int hi,
                                              const std::vector<BesovParams>& grid) {
  std::vector<std::vector<double>> ratios(grid.size());
  for (int n = lo; n <= hi; ++n) {
    const auto points = make_family(family, n, presets(n)[preset]);
    const CoefficientTable table(points, points.resolution() - 1);
    const double n_points = static_cast<double>(points.size());
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const double norm = besov_norm_exact(table, grid[g]).total;
      ratios[g].push_back(norm / besov_reference_rate(n_points, grid[g]));
    }
  }
  return ratios;
}

Verdict criterion1() {
  CheckReport all;
  for (int n = 1; n <= 12; ++n) {
    for (const auto& sigma : presets(n)) {
      all.merge(verify_symmetrized(n, sigma, n + 2));
    }
  }
  std::string signs;
  for (const auto& [key, value] : all.notes) {
    signs += (signs.empty() ? "" : ", ") + key + " " + value;
  }
  return {all.passed(), counts(all) + "; observed signs: " + signs + first_failure(all)};
}

Verdict criterion2() {
  CheckReport all;
  for (int n = 1; n <= 12; ++n) {
    for (const auto& sigma : presets(n)) {
      all.merge(verify_davenport(n, sigma));
    }
  }
  return {all.passed(), counts(all) + first_failure(all)};
}

Verdict criterion3() {
  CheckReport literal;
  CheckReport signed_form;
  std::vector<std::string> failing_presets;
  for (int n = 1; n <= 12; ++n) {
    const auto list = presets(n);
    const char* names[] = {"identity", "all-flip", "alternating", "random(7)"};
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto report = verify_counting_sums(n, list[i], ProductForm::Unsigned);
      if (!report.passed() &&
          std::find(failing_presets.begin(), failing_presets.end(), names[i]) == failing_presets.end()) {
        failing_presets.push_back(names[i]);
      }
      literal.merge(report);
      signed_form.merge(verify_counting_sums(n, list[i], ProductForm::Signed));
    }
  }
  std::string detail = "literal product formula: " + counts(literal);
  if (!failing_presets.empty()) {
    detail += " (presets affected:";
    for (const auto& name : failing_presets) {
      detail += " " + name;
    }
    detail += ";" + first_failure(literal) + ")";
  }
  detail += "; with sign T = +-1 from sigma positions j2+1 and n-j1: " + counts(signed_form);
  return {literal.passed(), detail};
}

Verdict criterion4() {
  CheckReport all;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& sigma : presets(n)) {
      for (const auto family : kFamilies) {
        all.merge(verify_oracle(make_family(family, n, sigma), 6));
      }
    }
  }
  return {all.passed(), counts(all) + first_failure(all)};
}

Verdict criterion5() {
  const auto grid = criterion5_grid();
  std::vector<double> worst(grid.size(), 0.0);
  for (std::size_t preset = 0; preset < 4; ++preset) {
    const auto ratios = besov_ratios(Family::Symmetrized, preset, 4, 14, grid);
    for (std::size_t g = 0; g < grid.size(); ++g) {
      worst[g] = std::max(worst[g], spread(ratios[g]));
    }
  }
  bool pass = true;
  std::string detail = "worst max/min over n=4..14 and the four presets:";
  for (std::size_t g = 0; g < grid.size(); ++g) {
    pass = pass && worst[g] <= 4.0;
    detail += " " + param_name(grid[g]) + " " + fmt(worst[g]);
  }
  return {pass, detail};
}

Verdict criterion6() {
  const BesovParams params{2, 2, -0.3};
  const char* names[] = {"identity", "all-flip", "alternating", "random(7)"};
  bool pass = true;
  std::string detail = "Davenport ratio(n=14)/ratio(n=6), need >= 4:";
  double band = 0.0;
  for (std::size_t preset = 0; preset < 4; ++preset) {
    const auto davenport = besov_ratios(Family::Davenport, preset, 6, 14, {params})[0];
    const double growth = davenport.back() / davenport.front();
    pass = pass && growth >= 4.0;
    detail += std::string(" ") + names[preset] + " " + fmt(growth);
    band = std::max(band, spread(besov_ratios(Family::Symmetrized, preset, 4, 14, {params})[0]));
  }
  pass = pass && band <= 4.0;
  return {pass, detail + "; symmetrized max/min " + fmt(band) + ", need <= 4"};
}

Verdict criterion7() {
  const auto f = zero_boundary_product(1, 1);
  const Rational quarter = Rational(1) / 4;
  std::size_t checked = 0;
  std::size_t failed = 0;
  for (int n = 1; n <= 16; ++n) {
    for (const auto& sigma : presets(n)) {
      const auto hammersley = hammersley_type(n, sigma);
      checked += 2;
      failed += qmc_integrate_exact(symmetrize_full(hammersley), f) == quarter ? 0 : 1;
      const Rational excess = qmc_integrate_exact(symmetrize_davenport(hammersley), f) - quarter;
      failed += excess == DyadicRational::pow2(n + 2).to_rational() ? 0 : 1;
    }
  }
  return {failed == 0, std::to_string(checked) + " identities, " + std::to_string(failed) + " failed"};
}

Verdict criterion8() {
  std::size_t checked = 0;
  std::size_t failed = 0;
  for (int n = 1; n <= 10; ++n) {
    for (const auto& sigma : presets(n)) {
      for (const auto family : kFamilies) {
        const auto points = make_family(family, n, sigma);
        ++checked;
        failed += l2_warnock(points) == lp_exact_even(points, 2) ? 0 : 1;
      }
    }
  }
  std::vector<double> ratios;
  for (int n = 4; n <= 16; ++n) {
    const auto points = symmetrize_full(hammersley_type(n, SignPattern::identity(n)));
    const double n_points = static_cast<double>(points.size());
    const double l2 = std::sqrt(l2_warnock(points).convert_to<double>());
    ratios.push_back(l2 * n_points / std::sqrt(std::log2(n_points)));
  }
  const double band = spread(ratios);
  return {failed == 0 && band <= 4.0, std::to_string(checked) + " Warnock/cell comparisons, " +
                                          std::to_string(failed) + " failed; L2 ratio max/min over n=4..16 = " +
                                          fmt(band)};
}

Verdict criterion9() {
  const auto grid = criterion5_grid();
  double worst = 0.0;
  std::string worst_at;
  for (int n = 1; n <= 10; ++n) {
    for (const auto family : kFamilies) {
      const auto points = make_family(family, n, SignPattern::seeded_random(n, 7));
      const int j_max = points.resolution() + 40;
      const CoefficientTable table(points, j_max);
      for (const auto& params : grid) {
        const double exact = besov_norm_exact(table, params).total;
        const double truncated = besov_norm_truncated(table, params, j_max).total;
        const double rel = std::fabs(exact - truncated) / exact;
        if (rel > worst) {
          worst = rel;
          worst_at = std::string(to_string(family)) + " n=" + std::to_string(n) + " " + param_name(params);
        }
      }
    }
  }
  return {worst <= 1e-9, "largest relative difference " + fmt(worst) + (worst_at.empty() ? "" : " at " + worst_at)};
}

Verdict criterion10() {
  std::size_t checked = 0;
  std::size_t failed = 0;
  for (int n = 1; n <= 12; ++n) {
    for (const auto& sigma : presets(n)) {
      ++checked;
      failed += is_net(hammersley_type(n, sigma), n) ? 0 : 1;
    }
  }
  return {failed == 0, std::to_string(checked) + " sets, " + std::to_string(failed) + " not nets"};
}

} // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "symmetrized coefficient classification, n<=12, levels -1..n+2", criterion1},
      {2, "Davenport coefficient formulas, n<=12", criterion2},
      {3, "counting-sum identities, n<=12", criterion3},
      {4, "oracle equivalence, n<=6, levels <=6, all families", criterion4},
      {5, "Besov ratio band <= 4 for the symmetrized family, n=4..14", criterion5},
      {6, "Davenport ratio growth >= 4 from n=6 to n=14 at p=q=2, r=-0.3", criterion6},
      {7, "QMC exactness identities, n<=16", criterion7},
      {8, "Warnock = cell integration (n<=10) and L2 ratio band (n=4..16)", criterion8},
      {9, "exact tail vs truncation at J=n+40, relative <= 1e-9", criterion9},
      {10, "net property of R_n, n<=12", criterion10},
  };
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > static_cast<int>(criteria.size())) {
      std::cerr << "usage: acceptance [1-10]\n";
      return 2;
    }
  }
  int failures = 0;
  for (const auto& criterion : criteria) {
    if (only != 0 && criterion.id != only) {
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    Verdict verdict;
    try {
      verdict = criterion.check();
    } catch (const std::exception& e) {
      verdict = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.id == 1 && seconds >= 120.0) {
      verdict.pass = false;
      verdict.detail += "; runtime target of 2 minutes exceeded";
    }
    failures += verdict.pass ? 0 : 1;
    std::cout << (verdict.pass ? "[PASS] " : "[FAIL] ") << "C" << criterion.id << " " << criterion.title << ": "
              << verdict.detail << " (" << fmt(seconds) << " s)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
