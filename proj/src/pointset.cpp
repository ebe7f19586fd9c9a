#include "dyadisc/pointset.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace dyadisc {

SignPattern::SignPattern(std::vector<bool> flips) : flips_(std::move(flips)) {
  if (flips_.empty()) {
    throw std::invalid_argument("SignPattern: n must be positive");
  }
}

SignPattern SignPattern::identity(int n) {
  return SignPattern(std::vector<bool>(static_cast<std::size_t>(std::max(n, 0)), false));
}

SignPattern SignPattern::all_flip(int n) {
  return SignPattern(std::vector<bool>(static_cast<std::size_t>(std::max(n, 0)), true));
}

SignPattern SignPattern::alternating(int n) {
  std::vector<bool> flips(static_cast<std::size_t>(std::max(n, 0)));
  for (std::size_t i = 0; i < flips.size(); ++i) {
    flips[i] = (i % 2) == 1;
  }
  return SignPattern(std::move(flips));
}

SignPattern SignPattern::seeded_random(int n, std::uint64_t seed) {
  // mt19937_64 output is fixed by the standard; distributions are not.
  std::mt19937_64 rng(seed);
  std::vector<bool> flips(static_cast<std::size_t>(std::max(n, 0)));
  for (std::size_t i = 0; i < flips.size(); ++i) {
    flips[i] = (rng() >> 63) != 0;
  }
  return SignPattern(std::move(flips));
}

std::string SignPattern::to_string() const {
  std::string out;
  out.reserve(flips_.size());
  for (bool f : flips_) {
    out.push_back(f ? '1' : '0');
  }
  return out;
}

SignPreset parse_sign_preset(std::string_view name) {
  if (name == "identity") {
    return SignPreset::Identity;
  }
  if (name == "all-flip") {
    return SignPreset::AllFlip;
  }
  if (name == "alternating") {
    return SignPreset::Alternating;
  }
  if (name == "random" || name == "seeded-random") {
    return SignPreset::Random;
  }
  throw std::invalid_argument("unknown sign preset: " + std::string(name));
}

std::string_view to_string(SignPreset preset) {
  switch (preset) {
  case SignPreset::Identity:
    return "identity";
  case SignPreset::AllFlip:
    return "all-flip";
  case SignPreset::Alternating:
    return "alternating";
  case SignPreset::Random:
    return "random";
  }
  return "?";
}

SignPattern make_sign_pattern(SignPreset preset, int n, std::uint64_t seed) {
  switch (preset) {
  case SignPreset::Identity:
    return SignPattern::identity(n);
  case SignPreset::AllFlip:
    return SignPattern::all_flip(n);
  case SignPreset::Alternating:
    return SignPattern::alternating(n);
  case SignPreset::Random:
    return SignPattern::seeded_random(n, seed);
  }
  throw std::invalid_argument("make_sign_pattern: bad preset");
}

namespace {

void check_unit_square(const Point& p) {
  const DyadicRational zero;
  const DyadicRational one(1);
  if (p.x < zero || p.x > one || p.y < zero || p.y > one) {
    throw std::invalid_argument("point outside [0,1]^2: (" + p.x.to_fraction_string() + ", " +
                                p.y.to_fraction_string() + ")");
  }
}

} // namespace

PointMultiset::PointMultiset(std::vector<Point> points) : points_(std::move(points)) {
  std::int64_t res = 0;
  for (const auto& p : points_) {
    check_unit_square(p);
    res = std::max({res, p.x.min_resolution(), p.y.min_resolution()});
  }
  resolution_ = static_cast<int>(res);
}

PointMultiset::PointMultiset(int resolution, std::vector<Point> points)
    : resolution_(resolution), points_(std::move(points)) {
  if (resolution < 0) {
    throw std::invalid_argument("PointMultiset: negative resolution");
  }
  for (const auto& p : points_) {
    check_unit_square(p);
    if (p.x.min_resolution() > resolution || p.y.min_resolution() > resolution) {
      throw std::invalid_argument("PointMultiset: coordinate finer than declared resolution " +
                                  std::to_string(resolution));
    }
  }
}

std::vector<Point> PointMultiset::sorted_points() const {
  std::vector<Point> out = points_;
  std::sort(out.begin(), out.end(), [](const Point& a, const Point& b) {
    if (a.x != b.x) {
      return a.x < b.x;
    }
    return a.y < b.y;
  });
  return out;
}

bool same_multiset(const PointMultiset& a, const PointMultiset& b) {
  return a.size() == b.size() && a.sorted_points() == b.sorted_points();
}

PointMultiset hammersley_type(int n, const SignPattern& sigma) {
  if (n <= 0) {
    throw std::invalid_argument("hammersley_type: n must be positive");
  }
  if (sigma.size() != n) {
    throw std::invalid_argument("hammersley_type: sign pattern has length " +
                                std::to_string(sigma.size()) + ", expected " + std::to_string(n));
  }
  if (n > 40) {
    throw std::invalid_argument("hammersley_type: n too large");
  }
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<Point> points;
  points.reserve(count);
  // Bit i-1 of `index` is t_i, so the first coordinate is index / 2^n.
  for (std::uint64_t index = 0; index < count; ++index) {
    std::uint64_t y_numerator = 0;
    for (int i = 1; i <= n; ++i) {
      std::uint64_t digit = (index >> (i - 1)) & 1U;
      if (sigma.flipped(i)) {
        digit ^= 1U;
      }
      y_numerator |= digit << (n - i);
    }
    points.push_back({DyadicRational(BigInt(index), n), DyadicRational(BigInt(y_numerator), n)});
  }
  return PointMultiset(n, std::move(points));
}

PointMultiset reflect(const PointMultiset& points, Axis axis) {
  const DyadicRational one(1);
  std::vector<Point> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    switch (axis) {
    case Axis::X:
      out.push_back({one - p.x, p.y});
      break;
    case Axis::Y:
      out.push_back({p.x, one - p.y});
      break;
    case Axis::XY:
      out.push_back({one - p.x, one - p.y});
      break;
    }
  }
  return PointMultiset(points.resolution(), std::move(out));
}

namespace {

PointMultiset concat(int resolution, std::initializer_list<const PointMultiset*> parts) {
  std::vector<Point> out;
  for (const auto* part : parts) {
    out.insert(out.end(), part->begin(), part->end());
  }
  return PointMultiset(resolution, std::move(out));
}

} // namespace

PointMultiset symmetrize_full(const PointMultiset& points) {
  const auto ry = reflect(points, Axis::Y);
  const auto rx = reflect(points, Axis::X);
  const auto rxy = reflect(points, Axis::XY);
  return concat(points.resolution(), {&points, &ry, &rx, &rxy});
}

PointMultiset symmetrize_davenport(const PointMultiset& points) {
  const auto ry = reflect(points, Axis::Y);
  return concat(points.resolution(), {&points, &ry});
}

bool is_net(const PointMultiset& points, int n) {
  if (n < 0 || n > 30) {
    throw std::invalid_argument("is_net: n out of range");
  }
  const std::size_t expected = std::size_t{1} << n;
  if (points.size() != expected) {
    throw std::invalid_argument("is_net: expected 2^" + std::to_string(n) + " points, got " +
                                std::to_string(points.size()));
  }
  const DyadicRational one(1);
  for (int j1 = 0; j1 <= n; ++j1) {
    const int j2 = n - j1;
    std::vector<int> occupancy(expected, 0);
    for (const auto& p : points) {
      // coordinate 1 lies in no half-open box
      if (p.x == one || p.y == one) {
        return false;
      }
      // floor(z * 2^j) via the integer numerator at a fine enough resolution
      const std::int64_t bits = std::max<std::int64_t>(points.resolution(), n);
      const auto m1 = static_cast<std::size_t>(p.x.numerator_at(bits) >> static_cast<unsigned>(bits - j1));
      const auto m2 = static_cast<std::size_t>(p.y.numerator_at(bits) >> static_cast<unsigned>(bits - j2));
      if (++occupancy[(m1 << j2) | m2] > 1) {
        return false;
      }
    }
  }
  // 2^n points, none sharing a box among 2^n boxes: each box has exactly one.
  return true;
}

Family parse_family(std::string_view name) {
  if (name == "hammersley") {
    return Family::Hammersley;
  }
  if (name == "davenport") {
    return Family::Davenport;
  }
  if (name == "symmetrized") {
    return Family::Symmetrized;
  }
  throw std::invalid_argument("unknown family: " + std::string(name));
}

std::string_view to_string(Family family) {
  switch (family) {
  case Family::Hammersley:
    return "hammersley";
  case Family::Davenport:
    return "davenport";
  case Family::Symmetrized:
    return "symmetrized";
  }
  return "?";
}

PointMultiset make_family(Family family, int n, const SignPattern& sigma) {
  auto base = hammersley_type(n, sigma);
  switch (family) {
  case Family::Hammersley:
    return base;
  case Family::Davenport:
    return symmetrize_davenport(base);
  case Family::Symmetrized:
    return symmetrize_full(base);
  }
  throw std::invalid_argument("make_family: bad family");
}

} // namespace dyadisc
