#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dyadisc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact value mantissa * 2^(-exponent).
///
/// Always normalized: the mantissa is odd, or the value is zero and the
/// exponent is 0. The exponent may be negative, so integers such as 2^k are
/// stored as 1 * 2^(-(-k)).
class DyadicRational {
public:
  DyadicRational() = default;
  DyadicRational(BigInt mantissa, std::int64_t exponent);
  DyadicRational(std::int64_t integer) : DyadicRational(BigInt(integer), 0) {} // NOLINT

  /// 2^(-exponent)
  static DyadicRational pow2(std::int64_t negated_exponent_of_two);
  /// Exact value of a finite double.
  static DyadicRational from_double(double value);

  const BigInt& mantissa() const noexcept { return mantissa_; }
  std::int64_t exponent() const noexcept { return exponent_; }

  bool is_zero() const noexcept { return mantissa_.is_zero(); }
  int sign() const noexcept { return mantissa_.sign(); }

  DyadicRational operator-() const;
  DyadicRational abs() const;

  DyadicRational& operator+=(const DyadicRational& other);
  DyadicRational& operator-=(const DyadicRational& other);
  DyadicRational& operator*=(const DyadicRational& other);

  /// Multiplies by 2^(-k), exact for any integer k.
  DyadicRational scaled_by_pow2(std::int64_t k) const;

  friend DyadicRational operator+(DyadicRational a, const DyadicRational& b) { return a += b; }
  friend DyadicRational operator-(DyadicRational a, const DyadicRational& b) { return a -= b; }
  friend DyadicRational operator*(DyadicRational a, const DyadicRational& b) { return a *= b; }

  friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
    return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
  }
  friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b);

  /// Round-to-nearest-even conversion. Throws std::overflow_error when the
  /// magnitude exceeds the double range.
  double to_double() const;

  /// Integer value of this * 2^bits; throws std::domain_error if not integral.
  BigInt numerator_at(std::int64_t bits) const;

  /// Smallest nonnegative b with this * 2^b integral.
  std::int64_t min_resolution() const noexcept { return exponent_ > 0 ? exponent_ : 0; }

  Rational to_rational() const;

  /// "m/2^e" (or "m*2^k" for negative exponents, "m" when e = 0).
  std::string to_fraction_string() const;
  /// Terminating decimal expansion, e.g. "-0.375".
  std::string to_decimal_string() const;

private:
  void normalize();

  BigInt mantissa_{0};
  std::int64_t exponent_{0};
};

inline DyadicRational dyadic(BigInt mantissa, std::int64_t exponent) {
  return DyadicRational(std::move(mantissa), exponent);
}

inline DyadicRational abs(const DyadicRational& a) { return a.abs(); }

std::ostream& operator<<(std::ostream& os, const DyadicRational& a);

/// Exact division by 2^k when |n| = 2^k; throws std::domain_error otherwise.
DyadicRational divide_by_power_of_two_count(const DyadicRational& value, std::size_t count);

/// log2 of count if count is a power of two, else -1.
int exact_log2(std::size_t count) noexcept;

std::string to_string(const Rational& value);

} // namespace dyadisc
