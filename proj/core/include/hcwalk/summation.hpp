#pragma once

#include <cmath>

namespace hcwalk {

/// Neumaier's variant of Kahan summation.
///
/// Unlike plain Kahan it stays correct when an addend is larger in magnitude
/// than the running sum, which happens constantly in the alternating
/// binomial-weighted Chebyshev sums.
class CompensatedSum {
 public:
  CompensatedSum& operator+=(double value) {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  [[nodiscard]] double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace hcwalk
