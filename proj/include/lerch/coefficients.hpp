#pragma once

#include <complex>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "lerch/scalar.hpp"

namespace lerch {

/// How the Taylor coefficients C_n(z,a) of
///   f(z,x,a) = (1 - (z e^{-x})^{1-a}) / (1 - z e^{-x})
/// are produced.
enum class CoefficientPath {
  automatic,         ///< integer_direct for a in {1,2,...}, explicit_formula otherwise
  explicit_formula,  ///< C_n = c_n(z) - z^{1-a} p_n(z,a); Bernoulli form at z = 1
  recurrence,        ///< triangular recurrence from (1 - z e^{-x}) f = 1 - (z e^{-x})^{1-a}
  integer_direct,    ///< C_n(z,m) = -(1/n!) sum_{k=1}^{m-1} k^n / z^k
};

std::string_view to_string(CoefficientPath path);
CoefficientPath coefficient_path_from_string(std::string_view name);

/// Largest order for which the factorial-based paths are evaluated (n! in
/// double overflows beyond 170).
inline constexpr unsigned kMaxFactorialOrder = 170;

/// |z - 1| below this (z != 1) makes the explicit and recurrence paths lose digits.
inline constexpr double kNearOneThreshold = 1e-3;

namespace detail {

// Kernels run in 113-bit binary128 and round to long double on return.
using WideComplex = std::complex<long double>;

struct CoefficientKernelResult {
  std::vector<WideComplex> c;        // c_n(z), empty when z = 1
  std::vector<WideComplex> p;        // p_n(z,a), empty when z = 1
  std::vector<WideComplex> C;        // C_n(z,a)
  std::vector<long double> condition;  // cancellation factor per C_n
};

std::vector<WideComplex> polylog_neg_kernel(unsigned count, WideComplex z);
std::vector<WideComplex> c_kernel(unsigned count, WideComplex z);
std::vector<WideComplex> p_kernel(unsigned count, WideComplex z, WideComplex a);
CoefficientKernelResult coefficient_kernel(unsigned count, WideComplex z, WideComplex a,
                                           CoefficientPath resolved);

template <typename Real>
WideComplex widen(const std::complex<Real>& v) {
  return {static_cast<long double>(v.real()), static_cast<long double>(v.imag())};
}

template <typename Real>
std::complex<Real> narrow(const WideComplex& v) {
  return {static_cast<Real>(v.real()), static_cast<Real>(v.imag())};
}

template <typename Real>
ComplexVector<Real> narrow(const std::vector<WideComplex>& v) {
  ComplexVector<Real> out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = narrow<Real>(v[i]);
  return out;
}

inline void require_not_one(const WideComplex& z, std::string_view what) {
  if (z == WideComplex(1)) {
    throw DomainError(std::string(what) + " singular at z=1");
  }
}

}  // namespace detail

/// Rising factorial (s)_n = s (s+1) ... (s+n-1); (s)_0 = 1.
template <typename Real>
std::complex<Real> pochhammer(const std::complex<Real>& s, unsigned n) {
  std::complex<Real> acc{1};
  for (unsigned k = 0; k < n; ++k) acc *= s + Real(k);
  return acc;
}

/// Li_{-n}(z), a rational function of z, via
///   Li_{-n} = z/(1-z)^2 + z/(1-z) sum_{k=1}^{n-1} binom(n,k) Li_{-k}.
template <typename Real>
std::complex<Real> polylog_neg(unsigned n, const std::complex<Real>& z) {
  require_finite(z, "z");
  detail::require_not_one(detail::widen(z), "polylog of negative order");
  return detail::narrow<Real>(detail::polylog_neg_kernel(n + 1, detail::widen(z)).back());
}

/// c_0(z) = 1/(1-z), c_n(z) = (-1)^n Li_{-n}(z) / n!.
template <typename Real>
std::complex<Real> coeff_c(unsigned n, const std::complex<Real>& z) {
  require_finite(z, "z");
  detail::require_not_one(detail::widen(z), "c_n(z)");
  return detail::narrow<Real>(detail::c_kernel(n + 1, detail::widen(z)).back());
}

/// p_n(z,a) = sum_{k=0}^{n} c_{n-k}(z) (a-1)^k / k!.
template <typename Real>
std::complex<Real> poly_p(unsigned n, const std::complex<Real>& z, const std::complex<Real>& a) {
  require_finite(z, "z");
  require_finite(a, "a");
  detail::require_not_one(detail::widen(z), "p_n(z,a)");
  return detail::narrow<Real>(detail::p_kernel(n + 1, detail::widen(z), detail::widen(a)).back());
}

/// Resolves `automatic` and validates an explicit request against (z, a).
template <typename Real>
CoefficientPath resolve_path(const std::complex<Real>& z, const std::complex<Real>& a,
                             CoefficientPath requested) {
  if (z == std::complex<Real>(0)) throw DomainError("z = 0: log z undefined");
  if (requested == CoefficientPath::integer_direct && !is_positive_integer(a)) {
    throw UsageError("integer-direct path requires a positive integer a");
  }
  if (requested != CoefficientPath::automatic) return requested;
  return is_positive_integer(a) ? CoefficientPath::integer_direct
                                : CoefficientPath::explicit_formula;
}

/// Memoized C_n(z,a) for fixed (z, a), entries 0..count-1, produced by one path.
/// Immutable once built, so it may be shared between threads.
template <typename Real>
class CoefficientTable {
 public:
  static CoefficientTable build(const std::complex<Real>& z, const std::complex<Real>& a,
                                unsigned count,
                                CoefficientPath path = CoefficientPath::automatic) {
    require_finite(z, "z");
    require_finite(a, "a");
    CoefficientTable t;
    t.z_ = z;
    t.a_ = a;
    t.path_ = resolve_path(z, a, path);
    if (t.path_ != CoefficientPath::integer_direct && count > kMaxFactorialOrder + 1) {
      throw UsageError("coefficient order beyond " + std::to_string(kMaxFactorialOrder) +
                       " overflows n! on the factorial-based paths");
    }
    const auto wz = detail::widen(z);
    auto kernel = detail::coefficient_kernel(count, wz, detail::widen(a), t.path_);
    t.c_ = detail::narrow<Real>(kernel.c);
    t.p_ = detail::narrow<Real>(kernel.p);
    t.C_ = detail::narrow<Real>(kernel.C);
    t.condition_ = std::move(kernel.condition);

    const long double dist = std::abs(wz - detail::WideComplex(1));
    if (dist > 0 && dist < kNearOneThreshold && t.path_ != CoefficientPath::integer_direct) {
      t.diagnostics_.push_back("conditioning: |z-1| < 1e-3, explicit/recurrence coefficients "
                               "lose digits (c_n ~ (1-z)^(-n-1))");
    }
    // binary128 carries ~34 digits; flag entries whose cancellation eats into Real's.
    const long double wide_eps = 1.0e-34L;
    const long double target = static_cast<long double>(std::numeric_limits<Real>::epsilon());
    for (std::size_t n = 0; n < t.condition_.size(); ++n) {
      if (t.condition_[n] * wide_eps > target) {
        t.diagnostics_.push_back("conditioning: C_" + std::to_string(n) +
                                 " cancellation factor exceeds working precision");
        break;
      }
    }
    return t;
  }

  const std::complex<Real>& z() const { return z_; }
  const std::complex<Real>& a() const { return a_; }
  CoefficientPath path() const { return path_; }
  const ComplexVector<Real>& c() const { return c_; }
  const ComplexVector<Real>& p() const { return p_; }
  const ComplexVector<Real>& C() const { return C_; }
  const std::vector<long double>& condition() const { return condition_; }
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }
  Eigen::Index size() const { return C_.size(); }

 private:
  std::complex<Real> z_;
  std::complex<Real> a_;
  CoefficientPath path_ = CoefficientPath::automatic;
  ComplexVector<Real> c_;
  ComplexVector<Real> p_;
  ComplexVector<Real> C_;
  std::vector<long double> condition_;
  std::vector<std::string> diagnostics_;
};

/// C_n(z,a) along the requested path.
template <typename Real>
std::complex<Real> coeff_C(unsigned n, const std::complex<Real>& z, const std::complex<Real>& a,
                           CoefficientPath path = CoefficientPath::automatic) {
  return CoefficientTable<Real>::build(z, a, n + 1, path).C()(n);
}

}  // namespace lerch
