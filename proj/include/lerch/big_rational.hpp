#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace lerch {

/// Exact ratio of arbitrary-precision integers, always in lowest terms with a
/// positive denominator.
class BigRational {
 public:
  using Integer = boost::multiprecision::cpp_int;
  using Rep = boost::multiprecision::cpp_rational;

  BigRational() = default;
  BigRational(std::int64_t value) : rep_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(const Integer& numerator, const Integer& denominator);
  explicit BigRational(Rep rep) : rep_(std::move(rep)) {}

  Integer numerator() const { return boost::multiprecision::numerator(rep_); }
  Integer denominator() const { return boost::multiprecision::denominator(rep_); }

  bool is_zero() const { return rep_ == 0; }
  const Rep& rep() const { return rep_; }

  /// Nearest floating-point value.
  template <typename Real>
  Real to() const {
    return rep_.convert_to<Real>();
  }

  /// "p/q", or "p" when q = 1.
  std::string str() const;

  BigRational& operator+=(const BigRational& o) {
    rep_ += o.rep_;
    return *this;
  }
  BigRational& operator-=(const BigRational& o) {
    rep_ -= o.rep_;
    return *this;
  }
  BigRational& operator*=(const BigRational& o) {
    rep_ *= o.rep_;
    return *this;
  }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) { return BigRational(Rep(-a.rep_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.rep_ == b.rep_; }
  friend bool operator<(const BigRational& a, const BigRational& b) { return a.rep_ < b.rep_; }

 private:
  Rep rep_{0};
};

/// Exact binomial coefficient.
BigRational::Integer binomial(unsigned n, unsigned k);

}  // namespace lerch
