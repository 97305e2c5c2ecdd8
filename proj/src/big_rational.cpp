#include "lerch/big_rational.hpp"

#include "lerch/errors.hpp"

namespace lerch {

BigRational::BigRational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw DomainError("BigRational: zero denominator");
  if (denominator < 0) {
    rep_ = Rep(Integer(-numerator), Integer(-denominator));
  } else {
    rep_ = Rep(numerator, denominator);
  }
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw DomainError("BigRational: division by zero");
  rep_ /= o.rep_;
  return *this;
}

std::string BigRational::str() const {
  const Integer q = denominator();
  if (q == 1) return numerator().str();
  return numerator().str() + "/" + q.str();
}

BigRational::Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigRational::Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace lerch
