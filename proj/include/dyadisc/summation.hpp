#pragma once

#include <cmath>

namespace dyadisc {

/// Neumaier compensated summation; the result depends only on the order of add().
class CompensatedSum {
public:
  void add(double value) {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

} // namespace dyadisc
