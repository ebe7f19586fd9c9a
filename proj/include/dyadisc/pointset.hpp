#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dyadisc/dyadic.hpp"

namespace dyadisc {

/// Per-digit choice s_i = t_i (false) or s_i = 1 - t_i (true), i = 1..n.
class SignPattern {
public:
  explicit SignPattern(std::vector<bool> flips);

  static SignPattern identity(int n);
  static SignPattern all_flip(int n);
  /// s_i = t_i for odd i, s_i = 1 - t_i for even i.
  static SignPattern alternating(int n);
  static SignPattern seeded_random(int n, std::uint64_t seed);

  int size() const noexcept { return static_cast<int>(flips_.size()); }
  /// Flip at digit position i, 1-based.
  bool flipped(int position) const { return flips_.at(static_cast<std::size_t>(position - 1)); }
  const std::vector<bool>& flips() const noexcept { return flips_; }

  std::string to_string() const;

private:
  std::vector<bool> flips_;
};

enum class SignPreset { Identity, AllFlip, Alternating, Random };

SignPreset parse_sign_preset(std::string_view name);
std::string_view to_string(SignPreset preset);
SignPattern make_sign_pattern(SignPreset preset, int n, std::uint64_t seed = 0);

struct Point {
  DyadicRational x;
  DyadicRational y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Ordered multiset of points in [0,1]^2. Every coordinate is an integer
/// multiple of 2^-resolution.
class PointMultiset {
public:
  PointMultiset() = default;
  /// Resolution is the smallest one that fits all coordinates.
  explicit PointMultiset(std::vector<Point> points);
  /// Throws std::invalid_argument if a coordinate is off the 2^-resolution grid.
  PointMultiset(int resolution, std::vector<Point> points);

  int resolution() const noexcept { return resolution_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const std::vector<Point>& points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  /// Points sorted lexicographically; equality of two results means
  /// multiset equality.
  std::vector<Point> sorted_points() const;

private:
  int resolution_ = 0;
  std::vector<Point> points_;
};

bool same_multiset(const PointMultiset& a, const PointMultiset& b);

/// 2^n points (t_n/2 + ... + t_1/2^n, s_1/2 + ... + s_n/2^n), digit vectors
/// enumerated so that the first coordinate increases.
PointMultiset hammersley_type(int n, const SignPattern& sigma);

enum class Axis { X, Y, XY };

PointMultiset reflect(const PointMultiset& points, Axis axis);

/// P, reflect(P,Y), reflect(P,X), reflect(P,XY) concatenated in that order.
PointMultiset symmetrize_full(const PointMultiset& points);

/// P followed by reflect(P,Y).
PointMultiset symmetrize_davenport(const PointMultiset& points);

/// True iff every dyadic box of area 2^-n (half-open) holds exactly one point.
bool is_net(const PointMultiset& points, int n);

enum class Family { Hammersley, Davenport, Symmetrized };

Family parse_family(std::string_view name);
std::string_view to_string(Family family);

PointMultiset make_family(Family family, int n, const SignPattern& sigma);

} // namespace dyadisc
