#include "dyadisc/dyadic.hpp"

#include <bit>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace dyadisc {

namespace mp = boost::multiprecision;

DyadicRational::DyadicRational(BigInt mantissa, std::int64_t exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  normalize();
}

void DyadicRational::normalize() {
  if (mantissa_.is_zero()) {
    exponent_ = 0;
    return;
  }
  const bool negative = mantissa_.sign() < 0;
  BigInt magnitude = negative ? BigInt(-mantissa_) : mantissa_;
  const auto shift = static_cast<std::int64_t>(mp::lsb(magnitude));
  if (shift > 0) {
    magnitude >>= static_cast<unsigned>(shift);
    mantissa_ = negative ? BigInt(-magnitude) : magnitude;
    exponent_ -= shift;
  }
}

DyadicRational DyadicRational::pow2(std::int64_t negated_exponent_of_two) {
  DyadicRational out;
  out.mantissa_ = 1;
  out.exponent_ = negated_exponent_of_two;
  return out;
}

DyadicRational DyadicRational::from_double(double value) {
  if (!std::isfinite(value)) {
    throw std::domain_error("from_double: non-finite value");
  }
  if (value == 0.0) {
    return {};
  }
  int exp2 = 0;
  const double frac = std::frexp(value, &exp2);
  // frac in [0.5, 1): 53 significant bits fit in an int64 after scaling.
  const auto scaled = static_cast<std::int64_t>(std::ldexp(frac, 53));
  return DyadicRational(BigInt(scaled), 53 - static_cast<std::int64_t>(exp2));
}

DyadicRational DyadicRational::operator-() const {
  DyadicRational out = *this;
  out.mantissa_ = -out.mantissa_;
  return out;
}

DyadicRational DyadicRational::abs() const {
  DyadicRational out = *this;
  if (out.mantissa_.sign() < 0) {
    out.mantissa_ = -out.mantissa_;
  }
  return out;
}

DyadicRational& DyadicRational::operator+=(const DyadicRational& other) {
  if (other.is_zero()) {
    return *this;
  }
  if (is_zero()) {
    return *this = other;
  }
  if (exponent_ == other.exponent_) {
    mantissa_ += other.mantissa_;
  } else if (exponent_ > other.exponent_) {
    mantissa_ += other.mantissa_ << static_cast<unsigned>(exponent_ - other.exponent_);
  } else {
    mantissa_ <<= static_cast<unsigned>(other.exponent_ - exponent_);
    mantissa_ += other.mantissa_;
    exponent_ = other.exponent_;
  }
  normalize();
  return *this;
}

DyadicRational& DyadicRational::operator-=(const DyadicRational& other) {
  return *this += -other;
}

DyadicRational& DyadicRational::operator*=(const DyadicRational& other) {
  mantissa_ *= other.mantissa_;
  exponent_ += other.exponent_;
  // product of odd mantissas is odd; only zero needs fixing
  if (mantissa_.is_zero()) {
    exponent_ = 0;
  }
  return *this;
}

DyadicRational DyadicRational::scaled_by_pow2(std::int64_t k) const {
  DyadicRational out = *this;
  if (!out.is_zero()) {
    out.exponent_ += k;
  }
  return out;
}

std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
  const DyadicRational diff = a - b;
  const int s = diff.sign();
  if (s < 0) {
    return std::strong_ordering::less;
  }
  if (s > 0) {
    return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

double DyadicRational::to_double() const {
  if (is_zero()) {
    return 0.0;
  }
  const bool negative = mantissa_.sign() < 0;
  BigInt magnitude = negative ? BigInt(-mantissa_) : mantissa_;
  const auto bits = static_cast<std::int64_t>(mp::msb(magnitude)) + 1;
  std::int64_t shift = 0;
  if (bits > 53) {
    shift = bits - 53;
    const BigInt remainder = magnitude & ((BigInt(1) << static_cast<unsigned>(shift)) - 1);
    const BigInt half = BigInt(1) << static_cast<unsigned>(shift - 1);
    magnitude >>= static_cast<unsigned>(shift);
    if (remainder > half || (remainder == half && mp::bit_test(magnitude, 0))) {
      magnitude += 1;
    }
  }
  const auto top = magnitude.convert_to<std::int64_t>();
  const std::int64_t e2 = shift - exponent_;
  if (e2 > 2000) {
    throw std::overflow_error("to_double: value exceeds double range");
  }
  const double result = std::ldexp(static_cast<double>(top), static_cast<int>(std::max<std::int64_t>(e2, -2200)));
  if (std::isinf(result)) {
    throw std::overflow_error("to_double: value exceeds double range");
  }
  return negative ? -result : result;
}

BigInt DyadicRational::numerator_at(std::int64_t bits) const {
  const std::int64_t shift = bits - exponent_;
  if (shift < 0) {
    throw std::domain_error("numerator_at: value is not a multiple of 2^-" + std::to_string(bits));
  }
  return mantissa_ << static_cast<unsigned>(shift);
}

Rational DyadicRational::to_rational() const {
  if (exponent_ >= 0) {
    return Rational(mantissa_, BigInt(1) << static_cast<unsigned>(exponent_));
  }
  return Rational(mantissa_ << static_cast<unsigned>(-exponent_));
}

std::string DyadicRational::to_fraction_string() const {
  if (exponent_ == 0) {
    return mantissa_.str();
  }
  if (exponent_ > 0) {
    return mantissa_.str() + "/2^" + std::to_string(exponent_);
  }
  return mantissa_.str() + "*2^" + std::to_string(-exponent_);
}

std::string DyadicRational::to_decimal_string() const {
  if (exponent_ <= 0) {
    return numerator_at(0).str();
  }
  // m / 2^e = m * 5^e / 10^e
  const bool negative = mantissa_.sign() < 0;
  BigInt digits_value = negative ? BigInt(-mantissa_) : mantissa_;
  digits_value *= mp::pow(BigInt(5), static_cast<unsigned>(exponent_));
  std::string digits = digits_value.str();
  const auto places = static_cast<std::size_t>(exponent_);
  if (digits.size() <= places) {
    digits.insert(0, places - digits.size() + 1, '0');
  }
  digits.insert(digits.size() - places, 1, '.');
  return negative ? "-" + digits : digits;
}

std::ostream& operator<<(std::ostream& os, const DyadicRational& a) {
  return os << a.to_fraction_string();
}

int exact_log2(std::size_t count) noexcept {
  if (count == 0 || !std::has_single_bit(count)) {
    return -1;
  }
  return std::countr_zero(count);
}

DyadicRational divide_by_power_of_two_count(const DyadicRational& value, std::size_t count) {
  const int k = exact_log2(count);
  if (k < 0) {
    throw std::domain_error("exact dyadic result requires a power-of-two point count, got " +
                            std::to_string(count));
  }
  return value.scaled_by_pow2(k);
}

std::string to_string(const Rational& value) {
  const BigInt num = mp::numerator(value);
  const BigInt den = mp::denominator(value);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

} // namespace dyadisc
