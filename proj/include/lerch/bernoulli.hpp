#pragma once

#include <complex>
#include <vector>

#include "lerch/big_rational.hpp"

namespace lerch {

/// Bernoulli number B_n with B_1 = -1/2. Exact; memoized (first 65 entries are
/// built on first use, later ones appended on demand). Safe for concurrent callers.
BigRational bernoulli_number(unsigned n);

/// Coefficients of B_n(x) in ascending powers: entry j is binom(n, j) B_{n-j}.
std::vector<BigRational> bernoulli_polynomial_coefficients(unsigned n);

/// B_n(x), exact rational coefficients evaluated by Horner's rule.
template <typename Real>
std::complex<Real> bernoulli_polynomial(unsigned n, const std::complex<Real>& x) {
  const auto coeffs = bernoulli_polynomial_coefficients(n);
  std::complex<Real> acc{0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + it->template to<Real>();
  }
  return acc;
}

}  // namespace lerch
