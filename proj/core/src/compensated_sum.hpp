#pragma once

#include <cmath>

namespace texturematrix::detail {

// Neumaier's variant of Kahan summation. Adding 0.0 leaves the state
// untouched, so skipping zero terms does not change the result.
class CompensatedSum {
 public:
  void add(double term) noexcept {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
  }

  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace texturematrix::detail
