#pragma once

// Independent reference evaluators used to validate the expansions: direct
// summation, the defining power series, quadrature of the pole-free integral
// representation of F, the summation-by-parts identity, Euler–Maclaurin at
// z = 1 and Hurwitz zeta by tail summation.

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <type_traits>
#include <vector>

#include "lerch/bernoulli.hpp"
#include "lerch/coefficients.hpp"
#include "lerch/compensated_sum.hpp"
#include "lerch/gamma.hpp"
#include "lerch/quadrature.hpp"
#include "lerch/scalar.hpp"

namespace lerch {

struct QuadratureSettings {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_subdivisions = 2000;
  /// Half-width around x = log z where f is replaced by its local Taylor polynomial.
  double singularity_window = 1e-6;

  void validate() const {
    if (!(abs_tol > 0) || !(rel_tol > 0)) throw UsageError("quadrature tolerances must be > 0");
    if (max_subdivisions < 1) throw UsageError("max_subdivisions must be >= 1");
    if (!(singularity_window >= 0)) throw UsageError("singularity_window must be >= 0");
  }
};

/// eta(z,s,m) = sum_{n=1}^{m} z^n / n^s, compensated. Integer s uses exact
/// integer powers of n. Double input is summed in long double and rounded once.
template <typename Real>
std::complex<Real> eta_direct(const std::complex<Real>& z, const std::complex<Real>& s,
                              unsigned long m) {
  using W = std::conditional_t<std::is_same_v<Real, double>, long double, Real>;
  using C = std::complex<W>;
  require_finite(z, "z");
  require_finite(s, "s");
  if (m < 1) throw UsageError("eta_direct: m >= 1 required");
  const bool integer_s =
      is_real(s) && std::floor(s.real()) == s.real() && std::abs(s.real()) <= Real(64);
  const int k = integer_s ? static_cast<int>(s.real()) : 0;
  const C zw(z.real(), z.imag());
  const C sw(s.real(), s.imag());
  CompensatedSum<C> acc;
  C zpow{1};
  for (unsigned long n = 1; n <= m; ++n) {
    zpow *= zw;
    C term;
    if (integer_s) {
      W npow = 1;
      for (int j = 0; j < std::abs(k); ++j) npow *= static_cast<W>(n);
      term = k >= 0 ? zpow / npow : zpow * npow;
    } else {
      term = zpow * std::exp(-sw * std::log(static_cast<W>(n)));
    }
    acc.add(term);
  }
  const C v = acc.value();
  return {static_cast<Real>(v.real()), static_cast<Real>(v.imag())};
}

/// Phi(z,s,a) = sum_{n>=0} z^n / (a+n)^s for |z| < 1, or |z| = 1 with Re s > 1.
/// Stops once a tail bound falls below tol |sum| for 3 consecutive terms.
template <typename Real>
std::complex<Real> phi_series(const std::complex<Real>& z, const std::complex<Real>& s,
                              const std::complex<Real>& a, double tol = 1e-15) {
  using C = std::complex<Real>;
  require_finite(z, "z");
  require_finite(s, "s");
  require_finite(a, "a");
  const Real r = std::abs(z);
  if (r > Real(1) || (r == Real(1) && !(s.real() > Real(1)))) {
    throw DomainError("power series needs |z| < 1, or |z| = 1 with Re s > 1");
  }
  if (is_real(a) && a.real() <= Real(0) && std::floor(a.real()) == a.real()) {
    throw DomainError("a must not be a non-positive integer");
  }
  constexpr unsigned long kMaxTerms = 50'000'000;
  CompensatedSum<C> acc;
  C zpow{1};
  int small = 0;
  for (unsigned long n = 0; n < kMaxTerms; ++n) {
    const C base = a + static_cast<Real>(n);
    const C term = zpow * inverse_power(base, s);
    acc.add(term);
    const Real tail = r < Real(1) ? std::abs(term) / (Real(1) - r)
                                  : std::abs(term) * std::abs(base) / (s.real() - Real(1));
    const Real sum_mag = std::abs(acc.value());
    small = (tail <= Real(tol) * sum_mag) ? small + 1 : 0;
    if (small >= 3) return acc.value();
    zpow *= z;
  }
  throw AccuracyError("phi_series: tolerance not reached",
                      detail::widen(acc.value()));
}

/// Li_s(z) = z Phi(z,s,1).
template <typename Real>
std::complex<Real> polylog_series(const std::complex<Real>& s, const std::complex<Real>& z,
                                  double tol = 1e-15) {
  return z * phi_series(z, s, std::complex<Real>(1), tol);
}

namespace detail {

/// e^{-ax} f(z,x,a), f = (1 - (z e^{-x})^{1-a}) / (1 - z e^{-x}), evaluated
/// without overflow and with the removable point x = log z patched.
template <typename Real>
class PoleFreeIntegrand {
 public:
  using C = std::complex<Real>;

  PoleFreeIntegrand(const C& z, const C& a, Real window)
      : log_z_(principal_log(z)), a_(a), b_(C(1) - a), window_(window) {
    const C b = b_;
    taylor_[0] = b;
    taylor_[1] = b * (b - Real(1)) / Real(2);
    taylor_[2] = b * (b - Real(1)) * (Real(2) * b - Real(1)) / Real(12);
    taylor_[3] = b * b * (b - Real(1)) * (b - Real(1)) / Real(24);
  }

  C operator()(Real x) const {
    const C u = log_z_ - x;  // z e^{-x} = e^u
    const C decay = std::exp(-a_ * x);
    if (std::abs(u) < window_) {
      // f = b + b(b-1)/2 u + b(b-1)(2b-1)/12 u^2 + b^2(b-1)^2/24 u^3 + O(u^4)
      return decay * (taylor_[0] + u * (taylor_[1] + u * (taylor_[2] + u * taylor_[3])));
    }
    const C bu = b_ * u;
    if (std::abs(bu) < Real(1)) return decay * (lerch::expm1(bu) / lerch::expm1(u));
    return (decay - std::exp(-a_ * x + bu)) / (-lerch::expm1(u));
  }

 private:
  C log_z_;
  C a_;
  C b_;
  Real window_;
  C taylor_[4];
};

}  // namespace detail

/// Upper integration limit: the integrand envelope
/// (e^{-Re a X} + |z^{1-a}| e^{-X}) X^{Re s - 1} drops to abs_tol/10.
template <typename Real>
Real quadrature_cutoff(const std::complex<Real>& z, const std::complex<Real>& s,
                       const std::complex<Real>& a, double abs_tol) {
  const Real sigma = s.real();
  // log |z^{1-a}| = Re((1-a) Log z)
  const Real log_zw = ((std::complex<Real>(1) - a) * principal_log(z)).real();
  const Real target = std::log(Real(abs_tol) / Real(10));
  auto log_envelope = [&](Real x) {
    const Real t1 = -a.real() * x;
    const Real t2 = log_zw - x;
    const Real hi = std::max(t1, t2);
    return hi + std::log1p(std::exp(std::min(t1, t2) - hi)) + (sigma - Real(1)) * std::log(x) +
           std::log(Real(1) / (Real(1) - std::exp(Real(-1))));
  };
  Real lo = std::max(Real(1), std::log(std::abs(z)) + Real(1));
  if (log_envelope(lo) <= target) return lo;
  Real hi = lo + Real(1);
  while (log_envelope(hi) > target) {
    hi = lo + Real(2) * (hi - lo);
    if (hi > Real(1e6)) throw AccuracyError("quadrature cutoff not found", {});
  }
  for (int it = 0; it < 200 && hi - lo > Real(1e-6) * hi; ++it) {
    const Real mid = (lo + hi) / 2;
    (log_envelope(mid) > target ? lo : hi) = mid;
  }
  return hi;
}

/// F(z,s,a) = (1/Gamma(s)) int_0^inf x^{s-1} e^{-ax} f(z,x,a) dx by adaptive
/// Gauss–Kronrod quadrature. For 0 < Re s < 1 the endpoint singularity is
/// removed with x = t^{1/Re s}.
template <typename Real>
std::complex<Real> F_quadrature(const std::complex<Real>& z, const std::complex<Real>& s,
                                const std::complex<Real>& a,
                                const QuadratureSettings& settings = {}) {
  using C = std::complex<Real>;
  require_finite(z, "z");
  require_finite(s, "s");
  require_finite(a, "a");
  settings.validate();
  if (!(a.real() > Real(0))) throw DomainError("F_quadrature: Re a > 0 required");
  if (!(s.real() > Real(0))) throw DomainError("F_quadrature: Re s > 0 required");
  if (z == C(0)) throw DomainError("F_quadrature: z = 0 not allowed (log z undefined)");

  const detail::PoleFreeIntegrand<Real> kernel(z, a, static_cast<Real>(settings.singularity_window));
  const Real x_max = quadrature_cutoff(z, s, a, settings.abs_tol);

  std::vector<Real> xs{Real(0)};
  const Real scale = Real(1) / std::abs(a);
  for (Real x = scale / 4; x < x_max; x *= 2) xs.push_back(x);
  const Real log_abs_z = std::log(std::abs(z));
  if (log_abs_z > Real(0) && log_abs_z < x_max) xs.push_back(log_abs_z);
  if (x_max > 1) xs.push_back(Real(1));
  xs.push_back(x_max);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  const Real sigma = s.real();
  IntegrationResult<Real> r;
  if (sigma < Real(1)) {
    const Real inv_sigma = Real(1) / sigma;
    const Real phase = s.imag() / sigma;
    auto integrand = [&](Real t) -> C {
      if (t <= Real(0)) return C(0);
      const Real x = std::pow(t, inv_sigma);
      const C jac = std::exp(C(0, phase) * std::log(t)) * inv_sigma;
      return jac * kernel(x);
    };
    for (auto& x : xs) x = std::pow(x, sigma);
    r = integrate_adaptive<Real>(integrand, xs, static_cast<Real>(settings.abs_tol),
                                 static_cast<Real>(settings.rel_tol), settings.max_subdivisions);
  } else {
    const C sm1 = s - Real(1);
    auto integrand = [&](Real x) -> C {
      if (x <= Real(0)) return C(0);
      return std::exp(sm1 * std::log(x)) * kernel(x);
    };
    r = integrate_adaptive<Real>(integrand, xs, static_cast<Real>(settings.abs_tol),
                                 static_cast<Real>(settings.rel_tol), settings.max_subdivisions);
  }
  const C value = r.value / gamma(s);
  if (!r.converged) {
    throw AccuracyError("F_quadrature: tolerance not met within " +
                            std::to_string(settings.max_subdivisions) + " subdivisions",
                        detail::widen(value));
  }
  return value;
}

/// |eta(z,s,m) - [z^{m+1}/((z-1)(m+1)^s) - z/(z-1)
///                + z/(z-1) sum_{n=1}^{depth} (s)_n (-1)^{n-1}/n! eta(z,s+n,m)]|,
/// every eta from eta_direct.
template <typename Real>
Real summation_by_parts_residual(const std::complex<Real>& z, const std::complex<Real>& s,
                                 unsigned long m, unsigned depth) {
  using C = std::complex<Real>;
  require_finite(z, "z");
  require_finite(s, "s");
  if (!is_real(z) || !(z.real() > Real(1))) throw DomainError("summation by parts: real z > 1 required");
  if (!(s.real() > Real(0))) throw DomainError("summation by parts: Re s > 0 required");
  if (m < 1 || depth < 1) throw UsageError("summation by parts: m >= 1 and depth >= 1 required");
  const C ratio = z / (z - Real(1));
  const C base = ipow(z, m + 1) / ((z - Real(1)) * std::exp(s * std::log(static_cast<Real>(m + 1)))) -
                 ratio;
  CompensatedSum<C> acc;
  C coeff{1};  // (s)_n / n!
  for (unsigned n = 1; n <= depth; ++n) {
    coeff *= (s + Real(n - 1)) / Real(n);
    const C sign = (n % 2 == 1) ? C(1) : C(-1);
    acc.add(sign * coeff * eta_direct(z, s + Real(n), m));
  }
  return std::abs(eta_direct(z, s, m) - (base + ratio * acc.value()));
}

template <typename Real>
struct EulerMaclaurinResult {
  std::complex<Real> value;
  Real bound;
};

/// F(1,s,m) ~ -zeta(s) + m^{1-s}/(s-1) + m^{-s}/2
///            + sum_{k=1}^{n} B_{2k}/(2k)! (s)_{2k-1} / m^{2k+s-1},
/// with |remainder| <= |B_{2n+2}|/(2n+2)! |(s)_{2n+1}| / m^{2n+s+1}.
template <typename Real>
EulerMaclaurinResult<Real> euler_maclaurin_F1(Real s, unsigned long m, unsigned n,
                                              const std::complex<Real>& zeta_s) {
  using C = std::complex<Real>;
  if (!(s > Real(1))) throw DomainError("Euler–Maclaurin form needs real s > 1");
  if (m < 1 || n < 1) throw UsageError("Euler–Maclaurin: m >= 1 and n >= 1 required");
  const Real mm = static_cast<Real>(m);
  CompensatedSum<C> acc;
  acc.add(-zeta_s);
  acc.add(C(std::pow(mm, Real(1) - s) / (s - Real(1))));
  acc.add(C(std::pow(mm, -s) / Real(2)));
  Real fact = 1;  // (2k)!
  for (unsigned k = 1; k <= n; ++k) {
    fact *= Real(2 * k - 1) * Real(2 * k);
    const Real b2k = bernoulli_number(2 * k).template to<Real>();
    const Real poch = pochhammer(C(s), 2 * k - 1).real();
    acc.add(C(b2k / fact * poch * std::pow(mm, -(Real(2 * k) + s - Real(1)))));
  }
  fact *= Real(2 * n + 1) * Real(2 * n + 2);
  const Real b = std::abs(bernoulli_number(2 * n + 2).template to<Real>());
  const Real bound = b / fact * std::abs(pochhammer(C(s), 2 * n + 1).real()) *
                     std::pow(mm, -(Real(2 * n) + s + Real(1)));
  return {acc.value(), bound};
}

/// Number of terms summed directly by hurwitz_zeta_direct.
inline constexpr unsigned long kHurwitzDirectTerms = 1'000'000;

/// zeta(s,m) = sum_{n>=0} (m+n)^{-s}: 10^6 terms directly, then the integral
/// tail M^{1-s}/(s-1) with endpoint corrections M^{-s}/2 + s M^{-s-1}/12, M = m + 10^6.
template <typename Real>
std::complex<Real> hurwitz_zeta_direct(const std::complex<Real>& s, unsigned long m,
                                       double tol = 1e-14) {
  using C = std::complex<Real>;
  require_finite(s, "s");
  if (!(s.real() > Real(1))) throw DomainError("hurwitz_zeta_direct: Re s > 1 required");
  if (m < 1) throw UsageError("hurwitz_zeta_direct: m >= 1 required");
  // Smallest terms first.
  CompensatedSum<C> acc;
  for (unsigned long n = kHurwitzDirectTerms; n-- > 0;) {
    acc.add(std::exp(-s * std::log(static_cast<Real>(m + n))));
  }
  const Real big_m = static_cast<Real>(m + kHurwitzDirectTerms);
  const C log_m = C(std::log(big_m));
  const C m_pow = std::exp(-s * log_m);  // M^{-s}
  const C tail = m_pow * big_m / (s - Real(1)) + m_pow / Real(2) + s * m_pow / (Real(12) * big_m);
  const C value = acc.value() + tail;
  // Next Euler–Maclaurin correction: -(s)_3 M^{-s-3} / 720.
  const Real next = std::abs(pochhammer(s, 3) * m_pow) / (Real(720) * big_m * big_m * big_m);
  if (next > Real(tol) * std::abs(value)) {
    throw AccuracyError("hurwitz_zeta_direct: tolerance unreachable with 1e6 terms",
                        detail::widen(value));
  }
  return value;
}

}  // namespace lerch
