#include "dyadisc/verification.hpp"

#include <sstream>
#include <stdexcept>

namespace dyadisc {

namespace {

constexpr std::size_t kMaxRecordedFailures = 20;

std::string describe(const HaarIndex& idx) {
  std::ostringstream os;
  os << "j=(" << idx.j1 << "," << idx.j2 << ") m=(" << idx.m1 << "," << idx.m2 << ")";
  return os.str();
}

std::string sign_name(const DyadicRational& v) {
  return v.sign() > 0 ? "+" : (v.sign() < 0 ? "-" : "0");
}

} // namespace

void CheckReport::record(bool ok, const std::string& what) {
  ++checked;
  if (!ok) {
    ++failed;
    if (failures.size() < kMaxRecordedFailures) {
      failures.push_back(what);
    }
  }
}

void CheckReport::merge(const CheckReport& other) {
  checked += other.checked;
  failed += other.failed;
  for (const auto& f : other.failures) {
    if (failures.size() < kMaxRecordedFailures) {
      failures.push_back(f);
    }
  }
  for (const auto& [k, v] : other.notes) {
    auto [it, inserted] = notes.emplace(k, v);
    if (!inserted && it->second != v) {
      it->second = "mixed";
    }
  }
}

CheckReport verify_symmetrized(int n, const SignPattern& sigma, int level_max) {
  CheckReport report;
  report.name = "symmetrized coefficients n=" + std::to_string(n) + " sigma=" + sigma.to_string();
  const auto points = symmetrize_full(hammersley_type(n, sigma));
  const std::uint64_t off_pattern_limit = std::uint64_t{1} << (n + 2);

  for (int j1 = -1; j1 <= level_max; ++j1) {
    for (int j2 = -1; j2 <= level_max; ++j2) {
      const auto level = mu_all_at_level(points, j1, j2);
      const bool has_empty =
          level.log2_box_count() >= 63 ||
          (std::uint64_t{1} << level.log2_box_count()) > level.occupied.size();
      HaarIndex probe{j1, j2, 0, 0};
      const auto prediction = predict_symmetrized(n, sigma, probe);
      auto check = [&](const HaarIndex& idx, const DyadicRational& value) {
        report.record(prediction.satisfied_by(value),
                      describe(idx) + " case " + std::to_string(prediction.case_number) + ": got " +
                          value.to_fraction_string() + ", predicted " + prediction.value.to_fraction_string());
        if (prediction.case_number != 2 && prediction.case_number != 4 && prediction.case_number != 6) {
          const std::string key = "case " + std::to_string(prediction.case_number) + " sign";
          auto [it, inserted] = report.notes.emplace(key, sign_name(value));
          if (!inserted && it->second != sign_name(value)) {
            it->second = "mixed";
          }
        }
      };
      for (const auto& [m, value] : level.occupied) {
        check({j1, j2, m.first, m.second}, value);
      }
      if (has_empty) {
        // every empty box shares this value; report it once per level
        check({j1, j2, 0, 0}, level.empty_value);
      }
      if (prediction.case_number == 2) {
        std::uint64_t off_pattern = 0;
        const DyadicRational pattern = -mu_volume(j1, j2);
        for (const auto& entry : level.occupied) {
          if (entry.second != pattern) {
            ++off_pattern;
          }
        }
        report.record(off_pattern <= off_pattern_limit,
                      "j=(" + std::to_string(j1) + "," + std::to_string(j2) + ") off-pattern count " +
                          std::to_string(off_pattern) + " > " + std::to_string(off_pattern_limit));
      }
    }
  }
  return report;
}

CheckReport verify_davenport(int n, const SignPattern& sigma) {
  CheckReport report;
  report.name = "davenport coefficients n=" + std::to_string(n) + " sigma=" + sigma.to_string();
  const auto points = symmetrize_davenport(hammersley_type(n, sigma));
  for (int k = -1; k < n; ++k) {
    const auto level = mu_all_at_level(points, -1, k);
    const HaarIndex probe{-1, k, 0, 0};
    const auto prediction = predict_davenport(n, sigma, probe);
    const std::uint64_t boxes = std::uint64_t{1} << std::max(k, 0);
    for (std::uint64_t m2 = 0; m2 < boxes; ++m2) {
      const DyadicRational value = level.at(0, m2);
      const HaarIndex idx{-1, k, 0, m2};
      report.record(prediction.satisfied_by(value), describe(idx) + ": got " + value.to_fraction_string() +
                                                        ", predicted " + prediction.value.to_fraction_string());
    }
  }
  return report;
}

std::vector<CountingSums> counting_sums_at_level(const PointMultiset& points, int j1, int j2) {
  if (j1 < 0 || j2 < 0) {
    throw std::invalid_argument("counting_sums_at_level: j1, j2 must be >= 0");
  }
  if (j1 + j2 > 30) {
    throw std::invalid_argument("counting_sums_at_level: level too fine to enumerate");
  }
  const int res = points.resolution();
  std::vector<CountingSums> sums(std::size_t{1} << (j1 + j2));
  // tent weight on the 2^-res grid: A / 2^s with s = res - j - 1,
  // A = 2^s - |(2m+1) 2^s - X|; boxes are half-open, so a point on a lower
  // edge belongs to the box with weight zero on that axis
  auto tent = [res](int j, std::uint64_t x, std::uint64_t& m, std::int64_t& weight) {
    if (x >= (std::uint64_t{1} << res)) {
      return false;
    }
    if (j >= res) {
      m = x << (j - res);
      weight = 0;
      return true;
    }
    const int width_bits = res - j;
    m = x >> width_bits;
    const auto half = static_cast<std::int64_t>(std::uint64_t{1} << (width_bits - 1));
    const auto offset = static_cast<std::int64_t>((2 * m + 1) << (width_bits - 1)) - static_cast<std::int64_t>(x);
    weight = half - (offset < 0 ? -offset : offset);
    return true;
  };
  for (const auto& z : points) {
    std::uint64_t m1 = 0;
    std::uint64_t m2 = 0;
    std::int64_t a1 = 0;
    std::int64_t a2 = 0;
    if (!tent(j1, z.x.numerator_at(res).convert_to<std::uint64_t>(), m1, a1) ||
        !tent(j2, z.y.numerator_at(res).convert_to<std::uint64_t>(), m2, a2)) {
      continue;
    }
    auto& s = sums[(m1 << j2) | m2];
    const DyadicRational wx(BigInt(a1), res - j1 - 1);
    const DyadicRational wy(BigInt(a2), res - j2 - 1);
    s.single_x += wx;
    s.single_y += wy;
    s.product += wx * wy;
  }
  return sums;
}

CheckReport verify_counting_sums(int n, const SignPattern& sigma, ProductForm form) {
  CheckReport report;
  report.name = "counting sums n=" + std::to_string(n) + " sigma=" + sigma.to_string();
  const auto points = hammersley_type(n, sigma);
  for (int j1 = 0; j1 < n; ++j1) {
    for (int j2 = 0; j1 + j2 < n; ++j2) {
      const auto sums = counting_sums_at_level(points, j1, j2);
      const DyadicRational single = DyadicRational::pow2(-(n - j1 - j2 - 1));
      DyadicRational product = DyadicRational::pow2(-(n - j1 - j2 - 2)) + DyadicRational::pow2(n - j1 - j2);
      if (form == ProductForm::Signed) {
        product = counting_sums_prediction(sigma, j1, j2).product;
      }
      for (std::size_t key = 0; key < sums.size(); ++key) {
        const auto& s = sums[key];
        const std::string where = "j=(" + std::to_string(j1) + "," + std::to_string(j2) + ") box " +
                                  std::to_string(key);
        report.record(s.single_x == single, where + " x-sum " + s.single_x.to_fraction_string());
        report.record(s.single_y == single, where + " y-sum " + s.single_y.to_fraction_string());
        if (j1 + j2 < n - 1) {
          report.record(s.product == product, where + " product sum " + s.product.to_fraction_string());
        }
      }
    }
  }
  return report;
}

namespace {

template <typename Compare>
CheckReport sweep_indices(int level_max, std::string name, Compare&& compare) {
  CheckReport report;
  report.name = std::move(name);
  for (int j1 = -1; j1 <= level_max; ++j1) {
    for (int j2 = -1; j2 <= level_max; ++j2) {
      const std::uint64_t c1 = std::uint64_t{1} << std::max(j1, 0);
      const std::uint64_t c2 = std::uint64_t{1} << std::max(j2, 0);
      compare(report, j1, j2, c1, c2);
    }
  }
  return report;
}

} // namespace

CheckReport verify_oracle(const PointMultiset& points, int level_max) {
  return sweep_indices(level_max, "oracle equivalence",
                       [&](CheckReport& report, int j1, int j2, std::uint64_t c1, std::uint64_t c2) {
                         for (std::uint64_t m1 = 0; m1 < c1; ++m1) {
                           for (std::uint64_t m2 = 0; m2 < c2; ++m2) {
                             const HaarIndex idx{j1, j2, m1, m2};
                             const auto a = mu_discrepancy(points, idx);
                             const auto b = oracle_mu(points, idx);
                             report.record(a == b, describe(idx) + ": " + a.to_fraction_string() +
                                                       " vs oracle " + b.to_fraction_string());
                           }
                         }
                       });
}

CheckReport verify_level_consistency(const PointMultiset& points, int level_max) {
  return sweep_indices(level_max, "level consistency",
                       [&](CheckReport& report, int j1, int j2, std::uint64_t c1, std::uint64_t c2) {
                         const auto level = mu_all_at_level(points, j1, j2);
                         for (std::uint64_t m1 = 0; m1 < c1; ++m1) {
                           for (std::uint64_t m2 = 0; m2 < c2; ++m2) {
                             const HaarIndex idx{j1, j2, m1, m2};
                             const auto a = mu_discrepancy(points, idx);
                             const auto b = level.at(m1, m2);
                             report.record(a == b, describe(idx) + ": " + a.to_fraction_string() +
                                                       " vs level " + b.to_fraction_string());
                           }
                         }
                       });
}

} // namespace dyadisc
