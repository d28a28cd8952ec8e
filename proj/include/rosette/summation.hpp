#pragma once

#include <cstddef>

namespace rosette {

// Kahan-compensated accumulator. The cosecant and k-sums run up to
// n ~ 10^3 terms and several identity checks require 1e-12 relative
// agreement between algebraically equal forms.
class KahanSum {
 public:
  void add(double value) {
    double y = value - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

template <typename F>
double compensated_sum(std::size_t count, F&& term) {
  KahanSum acc;
  for (std::size_t k = 0; k < count; ++k) acc.add(term(k));
  return acc.value();
}

}  // namespace rosette
