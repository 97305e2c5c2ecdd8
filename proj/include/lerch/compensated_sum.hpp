#pragma once

#include <Eigen/Core>

#include <cmath>
#include <complex>

namespace lerch {

/// Neumaier's variant of Kahan summation. Tracks the rounding error of each
/// addition and folds it back in when the value is read.
template <typename Value>
class CompensatedSum {
 public:
  void add(Value v) {
    const Value t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      compensation_ += (sum_ - t) + v;
    } else {
      compensation_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(Value v) {
    add(v);
    return *this;
  }

  Value value() const { return sum_ + compensation_; }

 private:
  Value sum_{0};
  Value compensation_{0};
};

/// Complex values are compensated component-wise.
template <typename Real>
class CompensatedSum<std::complex<Real>> {
 public:
  void add(const std::complex<Real>& v) {
    re_.add(v.real());
    im_.add(v.imag());
  }

  CompensatedSum& operator+=(const std::complex<Real>& v) {
    add(v);
    return *this;
  }

  std::complex<Real> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<Real> re_;
  CompensatedSum<Real> im_;
};

/// Compensated sum of the entries of a vector, in index order.
template <typename Derived>
typename Derived::Scalar compensated_sum(const Eigen::DenseBase<Derived>& v) {
  CompensatedSum<typename Derived::Scalar> acc;
  for (Eigen::Index i = 0; i < v.size(); ++i) acc.add(v(i));
  return acc.value();
}

}  // namespace lerch
