#pragma once

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <string>
#include <string_view>

#include "lerch/errors.hpp"

namespace lerch {

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using ComplexVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

using ComplexScalar = std::complex<double>;

template <typename Real>
void require_finite(const std::complex<Real>& v, std::string_view name) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw DomainError(std::string(name) + " must be finite");
  }
}

template <typename Real>
bool is_real(const std::complex<Real>& v) {
  return v.imag() == Real(0);
}

/// Exact test: zero imaginary part and a real part in {1, 2, 3, ...}.
template <typename Real>
bool is_positive_integer(const std::complex<Real>& v) {
  return is_real(v) && v.real() >= Real(1) && std::floor(v.real()) == v.real();
}

/// Principal logarithm, Arg in (-pi, pi]. A negative zero imaginary part is
/// treated as +0 so the negative real axis maps to Arg = pi.
template <typename Real>
std::complex<Real> principal_log(std::complex<Real> z) {
  if (z.imag() == Real(0)) z = {z.real(), Real(0)};
  return std::log(z);
}

/// z^w = exp(w log z) on the principal branch.
template <typename Real>
std::complex<Real> principal_pow(const std::complex<Real>& z, const std::complex<Real>& w) {
  return std::exp(w * principal_log(z));
}

/// exp(w) - 1 without cancellation for small |w|.
template <typename Real>
std::complex<Real> expm1(const std::complex<Real>& w) {
  const Real x = w.real();
  const Real y = w.imag();
  const Real half_sin = std::sin(y / Real(2));
  const Real re = std::expm1(x) * std::cos(y) - Real(2) * half_sin * half_sin;
  const Real im = std::exp(x) * std::sin(y);
  return {re, im};
}

}  // namespace lerch

namespace lerch {

/// z^n by repeated squaring.
template <typename Real>
std::complex<Real> ipow(std::complex<Real> z, unsigned long n) {
  std::complex<Real> acc{1};
  while (n > 0) {
    if (n & 1UL) acc *= z;
    z *= z;
    n >>= 1;
  }
  return acc;
}

}  // namespace lerch

namespace lerch {

/// base^(-s). Real integer s with |s| <= 64 uses exact repeated products;
/// anything else exp(-s log base) on the principal branch.
template <typename Real>
std::complex<Real> inverse_power(const std::complex<Real>& base, const std::complex<Real>& s) {
  if (is_real(s) && std::floor(s.real()) == s.real() && std::abs(s.real()) <= Real(64)) {
    const long k = static_cast<long>(s.real());
    return k >= 0 ? std::complex<Real>(1) / ipow(base, static_cast<unsigned long>(k))
                  : ipow(base, static_cast<unsigned long>(-k));
  }
  return std::exp(-s * principal_log(base));
}

}  // namespace lerch
