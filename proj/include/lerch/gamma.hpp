#pragma once

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <complex>

#include "lerch/bernoulli.hpp"
#include "lerch/scalar.hpp"

namespace lerch {

/// Gamma function for complex argument.
///
/// Re s >= 1/2: shift up to Re w >= 10 with the recurrence, then the Stirling
/// series with 20 Bernoulli terms (truncation ~1e-23 there). Re s < 1/2: the
/// reflection formula. Positive integers return the exact factorial.
template <typename Real>
std::complex<Real> gamma(const std::complex<Real>& s) {
  using C = std::complex<Real>;
  require_finite(s, "s");
  const Real pi = boost::math::constants::pi<Real>();

  if (is_real(s) && std::floor(s.real()) == s.real()) {
    if (s.real() <= Real(0)) throw DomainError("gamma: pole at non-positive integer");
    if (s.real() <= Real(170)) {
      Real f = 1;
      for (int k = 2; k < static_cast<int>(s.real()); ++k) f *= Real(k);
      return C(f);
    }
  }

  if (s.real() < Real(0.5)) {
    return C(pi) / (std::sin(pi * s) * gamma(C(1) - s));
  }

  constexpr Real kShiftTarget = 10;
  constexpr unsigned kStirlingTerms = 20;

  C w = s;
  C product{1};
  while (w.real() < kShiftTarget) {
    product *= w;
    w += Real(1);
  }

  const C inv_w = C(1) / w;
  const C inv_w2 = inv_w * inv_w;
  C series{0};
  C inv_pow = inv_w;  // w^{-(2k-1)}
  for (unsigned k = 1; k <= kStirlingTerms; ++k) {
    const Real b2k = bernoulli_number(2 * k).template to<Real>();
    series += inv_pow * (b2k / (Real(2 * k) * Real(2 * k - 1)));
    inv_pow *= inv_w2;
  }
  const C log_gamma_w = (w - Real(0.5)) * std::log(w) - w +
                        Real(0.5) * std::log(Real(2) * pi) + series;
  return std::exp(log_gamma_w) / product;
}

}  // namespace lerch
