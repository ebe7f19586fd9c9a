#include <doctest.h>

#include "dyadisc/verification.hpp"
#include "test_support.hpp"

using namespace dyadisc;

TEST_CASE("check report bookkeeping") {
  CheckReport report;
  report.record(true, "fine");
  CHECK(report.passed());
  for (int i = 0; i < 30; ++i) {
    report.record(false, "bad " + std::to_string(i));
  }
  CHECK(report.checked == 31);
  CHECK(report.failed == 30);
  CHECK(report.failures.size() == 20);
  CHECK(report.failures.front() == "bad 0");

  CheckReport a;
  a.notes["case 3 sign"] = "+";
  CheckReport b;
  b.notes["case 3 sign"] = "-";
  b.record(true, "");
  a.merge(b);
  CHECK(a.notes["case 3 sign"] == "mixed");
  CHECK(a.checked == 1);
}

TEST_CASE("suites pass on small n for every preset") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& sigma : dyadisc::testing::all_presets(n)) {
      const auto sym = verify_symmetrized(n, sigma, n + 2);
      CHECK_MESSAGE(sym.passed(), (sym.failures.empty() ? sym.name : sym.failures.front()));
      CHECK(sym.checked > 0);
      const auto dav = verify_davenport(n, sigma);
      CHECK_MESSAGE(dav.passed(), (dav.failures.empty() ? dav.name : dav.failures.front()));
      CHECK(dav.checked == (std::uint64_t{1} << n));
      CHECK(verify_counting_sums(n, sigma).passed());
    }
  }
}

TEST_CASE("reflection-only cases keep their signs") {
  CheckReport merged;
  for (int n = 2; n <= 6; ++n) {
    for (const auto& sigma : dyadisc::testing::all_presets(n)) {
      merged.merge(verify_symmetrized(n, sigma, n + 2));
    }
  }
  // case (iii): every box empty, value -|volume|; case (v) likewise with the
  // negative volume, giving a positive coefficient
  CHECK(merged.notes["case 3 sign"] == "-");
  CHECK(merged.notes["case 5 sign"] == "+");
  CHECK(merged.notes["case 1 sign"] == "mixed");
}

TEST_CASE("unsymmetrized set breaks the vanishing root coefficient") {
  // the (-1,-1) coefficient of R_n is nonzero, so the symmetrization is what removes it
  const auto plain = hammersley_type(3, SignPattern::identity(3));
  CHECK(mu_discrepancy(plain, {-1, -1, 0, 0}) != DyadicRational());
  CHECK_FALSE(predict_symmetrized(3, {-1, -1, 0, 0}).satisfied_by(mu_discrepancy(plain, {-1, -1, 0, 0})));
  CHECK(verify_level_consistency(plain, 3).passed());
}

TEST_CASE("oracle suite over all families") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& sigma : dyadisc::testing::all_presets(n)) {
      for (const auto family : {Family::Hammersley, Family::Davenport, Family::Symmetrized}) {
        CHECK(verify_oracle(make_family(family, n, sigma), 4).passed());
      }
    }
  }
}
