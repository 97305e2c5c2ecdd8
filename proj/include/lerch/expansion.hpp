#pragma once

// Truncated large-a expansion of F(z,s,a) = Phi(z,s,a) - Li_s(z) z^{-a}, its
// convergent form at integer a, eta(z,s,m), the classic expansion of Phi off
// the cut, the two-part split of F and the Hurwitz zeta series.

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lerch/coefficients.hpp"
#include "lerch/compensated_sum.hpp"
#include "lerch/oracles.hpp"
#include "lerch/scalar.hpp"

namespace lerch {

template <typename Real>
struct ExpansionResult {
  std::complex<Real> value{};
  ComplexVector<Real> terms;  ///< term n = C_n(z,a) (s)_n / a^{n+s}
  long order_used = 0;
  Real remainder_estimate = 0;
  std::vector<std::string> diagnostics;

  /// Compensated partial sums; the last entry is `value`.
  ComplexVector<Real> partial_sums() const {
    ComplexVector<Real> out(terms.size());
    CompensatedSum<std::complex<Real>> acc;
    for (Eigen::Index i = 0; i < terms.size(); ++i) {
      acc.add(terms(i));
      out(i) = acc.value();
    }
    return out;
  }
};

namespace detail {

/// (s)_n / a^{n+s} for n = 0..count-1, with a^{n+s} = exp((n+s) log a)
/// (integer powers when s is a small real integer).
template <typename Real>
ComplexVector<Real> expansion_weights(const std::complex<Real>& s, const std::complex<Real>& a,
                                      unsigned count) {
  const std::complex<Real> log_a = principal_log(a);
  const bool integer_s = is_real(s) && std::floor(s.real()) == s.real() &&
                         std::abs(s.real()) <= Real(64);
  ComplexVector<Real> w(count);
  std::complex<Real> poch{1};
  for (unsigned n = 0; n < count; ++n) {
    const std::complex<Real> e = s + Real(n);
    w(n) = poch * (integer_s && e.real() <= Real(64) ? inverse_power(a, e) : std::exp(-e * log_a));
    poch *= e;
  }
  return w;
}

/// Terms C_n(z,m) (s)_n / m^{n+s} of the integer-a series, written as
///   -m^{-s} [(s)_n / n!] sum_{k=1}^{m-1} z^{-k} (k/m)^n
/// so neither n! nor (s)_n is formed on its own.
template <typename Real>
class IntegerSeriesTerms {
 public:
  IntegerSeriesTerms(const std::complex<Real>& z, const std::complex<Real>& s, unsigned long m)
      : s_(s), scale_(-inverse_power(std::complex<Real>(static_cast<Real>(m)), s)) {
    const std::complex<Real> inv_z = Real(1) / z;
    std::complex<Real> w{1};
    for (unsigned long k = 1; k < m; ++k) {
      w *= inv_z;
      weights_.push_back(w);
      ratios_.push_back(static_cast<Real>(k) / static_cast<Real>(m));
      powers_.push_back(Real(1));
    }
  }

  /// Next term, starting from n = 0.
  std::complex<Real> next() {
    if (n_ > 0) {
      g_ *= (s_ + Real(n_ - 1)) / Real(n_);
      for (std::size_t k = 0; k < powers_.size(); ++k) powers_[k] *= ratios_[k];
    }
    CompensatedSum<std::complex<Real>> acc;
    for (std::size_t k = 0; k < powers_.size(); ++k) acc.add(weights_[k] * powers_[k]);
    ++n_;
    return scale_ * g_ * acc.value();
  }

 private:
  std::complex<Real> s_;
  std::complex<Real> scale_;
  std::complex<Real> g_{1};
  unsigned long n_ = 0;
  std::vector<std::complex<Real>> weights_;
  std::vector<Real> ratios_;
  std::vector<Real> powers_;
};

template <typename Real>
void require_expansion_domain(const std::complex<Real>& z, const std::complex<Real>& s,
                              const std::complex<Real>& a) {
  require_finite(z, "z");
  require_finite(s, "s");
  require_finite(a, "a");
  if (!(a.real() > Real(1))) throw DomainError("Re a > 1 required (large-a expansion of F)");
  if (!(s.real() > Real(0))) throw DomainError("Re s > 0 required (large-a expansion of F)");
  if (z == std::complex<Real>(0)) throw DomainError("z = 0 not allowed (log z undefined)");
}

template <typename Real>
Eigen::Index smallest_index(const ComplexVector<Real>& terms, Eigen::Index first) {
  Eigen::Index best = first;
  for (Eigen::Index i = first; i < terms.size(); ++i) {
    if (std::abs(terms(i)) < std::abs(terms(best))) best = i;
  }
  return best;
}

inline unsigned long integer_value(double v) { return static_cast<unsigned long>(v); }
inline unsigned long integer_value(long double v) { return static_cast<unsigned long>(v); }

}  // namespace detail

/// sum_{n=0}^{N-1} C_n(z,a) (s)_n / a^{n+s}. The remainder estimate is the
/// first omitted term plus |z^{1-a}|, a heuristic rather than a bound.
template <typename Real>
ExpansionResult<Real> expand_F(const std::complex<Real>& z, const std::complex<Real>& s,
                               const std::complex<Real>& a, long N,
                               CoefficientPath path = CoefficientPath::automatic) {
  detail::require_expansion_domain(z, s, a);
  if (N < 1) throw UsageError("expansion order N must be >= 1");
  const auto resolved = resolve_path(z, a, path);
  ExpansionResult<Real> r;
  r.order_used = N;
  r.terms.resize(N);
  std::complex<Real> next_term;
  if (resolved == CoefficientPath::integer_direct) {
    detail::IntegerSeriesTerms<Real> gen(z, s, detail::integer_value(a.real()));
    for (long n = 0; n < N; ++n) r.terms(n) = gen.next();
    next_term = gen.next();
  } else {
    if (N > static_cast<long>(kMaxFactorialOrder)) {
      throw UsageError("expansion order beyond " + std::to_string(kMaxFactorialOrder) +
                       " needs n! beyond double range");
    }
    const auto table = CoefficientTable<Real>::build(z, a, static_cast<unsigned>(N + 1), resolved);
    const auto w = detail::expansion_weights(s, a, static_cast<unsigned>(N + 1));
    const ComplexVector<Real> all = table.C().cwiseProduct(w);
    r.terms = all.head(N);
    next_term = all(N);
    r.diagnostics = table.diagnostics();
  }
  r.value = compensated_sum(r.terms);
  const Real zw = std::abs(principal_pow(z, std::complex<Real>(1) - a));
  r.remainder_estimate = std::abs(next_term) + zw;
  r.diagnostics.push_back("path: " + std::string(to_string(resolved)));
  r.diagnostics.push_back("remainder estimate: heuristic, not a proven bound");
  r.diagnostics.push_back("smallest term index: " +
                          std::to_string(detail::smallest_index(r.terms, 0)));
  return r;
}

/// Convergent series for integer a = m >= 2 and |z| >= 1: terms are added
/// until |term| < tol |sum| three times in a row.
template <typename Real>
ExpansionResult<Real> evaluate_F_convergent(const std::complex<Real>& z,
                                            const std::complex<Real>& s, long m, double tol,
                                            long max_order) {
  require_finite(z, "z");
  require_finite(s, "s");
  if (m < 2) throw UsageError("convergent series needs integer m >= 2");
  if (!(tol > 0)) throw UsageError("tol must be > 0");
  if (max_order < 1) throw UsageError("max_order must be >= 1");
  if (!(s.real() > Real(0))) throw DomainError("Re s > 0 required (convergent series of F)");
  if (!(std::abs(z) >= Real(1))) {
    throw DomainError("|z| >= 1 required (convergent series of F at integer a)");
  }
  ExpansionResult<Real> r;
  r.diagnostics.push_back("path: integer-direct");
  r.diagnostics.push_back("convergence gated on |z| >= 1");
  detail::IntegerSeriesTerms<Real> gen(z, s, static_cast<unsigned long>(m));
  std::vector<std::complex<Real>> terms;
  CompensatedSum<std::complex<Real>> acc;
  int small = 0;
  bool converged = false;
  while (static_cast<long>(terms.size()) < max_order) {
    const auto t = gen.next();
    terms.push_back(t);
    acc.add(t);
    small = std::abs(t) < Real(tol) * std::abs(acc.value()) ? small + 1 : 0;
    if (small >= 3) {
      converged = true;
      break;
    }
  }
  r.terms = Eigen::Map<const ComplexVector<Real>>(terms.data(),
                                                  static_cast<Eigen::Index>(terms.size()));
  r.value = acc.value();
  r.order_used = static_cast<long>(terms.size());
  r.remainder_estimate = std::abs(terms.back());
  if (!converged) {
    throw TruncationError("convergent series: tolerance not reached within max_order = " +
                              std::to_string(max_order),
                          detail::widen(r.value));
  }
  r.diagnostics.push_back("stop: three consecutive terms below tol");
  return r;
}

namespace eta_method {
struct Asymptotic {
  long order = 20;
};
struct Convergent {
  double tol = 1e-14;
  long max_order = 20000;
};
struct Direct {};
}  // namespace eta_method

using EtaMethod = std::variant<eta_method::Asymptotic, eta_method::Convergent, eta_method::Direct>;

/// eta(z,s,m) = sum_{n=1}^{m} z^n / n^s. The expansion methods use
/// eta(z,s,m) = -z^{m+1} F(z,s,m+1).
template <typename Real>
std::complex<Real> evaluate_eta(const std::complex<Real>& z, const std::complex<Real>& s, long m,
                                const EtaMethod& method) {
  if (m < 1) throw UsageError("eta needs m >= 1");
  const auto scale = [&] { return -ipow(z, static_cast<unsigned long>(m + 1)); };
  if (const auto* asy = std::get_if<eta_method::Asymptotic>(&method)) {
    const std::complex<Real> a(static_cast<Real>(m + 1));
    return scale() * expand_F(z, s, a, asy->order).value;
  }
  if (const auto* conv = std::get_if<eta_method::Convergent>(&method)) {
    return scale() * evaluate_F_convergent(z, s, m + 1, conv->tol, conv->max_order).value;
  }
  return eta_direct(z, s, static_cast<unsigned long>(m));
}

/// Classic expansion of Phi off the cut: sum_{n=0}^{N-1} c_n(z) (s)_n / a^{n+s}.
template <typename Real>
ExpansionResult<Real> expand_phi_classic(const std::complex<Real>& z, const std::complex<Real>& s,
                                         const std::complex<Real>& a, long N) {
  require_finite(z, "z");
  require_finite(s, "s");
  require_finite(a, "a");
  if (is_real(z) && z.real() >= Real(1)) {
    throw DomainError("z on the cut [1, inf): use the expansion of F instead");
  }
  if (!(s.real() > Real(0))) throw DomainError("Re s > 0 required (expansion of Phi)");
  if (!(a.real() > Real(0))) throw DomainError("Re a > 0 required (expansion of Phi)");
  if (N < 1) throw UsageError("expansion order N must be >= 1");
  if (N > static_cast<long>(kMaxFactorialOrder)) {
    throw UsageError("expansion order beyond " + std::to_string(kMaxFactorialOrder) +
                     " needs n! beyond double range");
  }
  const auto c = detail::narrow<Real>(detail::c_kernel(static_cast<unsigned>(N + 1), detail::widen(z)));
  const auto w = detail::expansion_weights(s, a, static_cast<unsigned>(N + 1));
  const ComplexVector<Real> all = c.cwiseProduct(w);
  ExpansionResult<Real> r;
  r.terms = all.head(N);
  r.value = compensated_sum(r.terms);
  r.order_used = N;
  r.remainder_estimate = std::abs(all(N));
  r.diagnostics.push_back("remainder estimate: first omitted term");
  return r;
}

/// F = sum c_k (s)_k/a^{k+s} - z^{1-a} sum p_k (s)_k/a^{k+s} for real z > 1.
/// Returns the two parts; the second carries the minus sign, so they add up to F.
template <typename Real>
std::pair<std::complex<Real>, std::complex<Real>> split_F(const std::complex<Real>& z,
                                                          const std::complex<Real>& s,
                                                          const std::complex<Real>& a, long N) {
  detail::require_expansion_domain(z, s, a);
  if (!is_real(z) || !(z.real() > Real(1))) {
    throw DomainError("split needs real z > 1 (separable coefficients)");
  }
  if (N < 1) throw UsageError("expansion order N must be >= 1");
  if (N > static_cast<long>(kMaxFactorialOrder)) {
    throw UsageError("expansion order beyond " + std::to_string(kMaxFactorialOrder) +
                     " needs n! beyond double range");
  }
  const auto table = CoefficientTable<Real>::build(z, a, static_cast<unsigned>(N),
                                                   CoefficientPath::explicit_formula);
  const auto w = detail::expansion_weights(s, a, static_cast<unsigned>(N));
  const std::complex<Real> part1 = compensated_sum(table.c().cwiseProduct(w));
  const std::complex<Real> sum_p = compensated_sum(table.p().cwiseProduct(w));
  const std::complex<Real> part2 = -principal_pow(z, std::complex<Real>(1) - a) * sum_p;
  return {part1, part2};
}

/// zeta(s,m) = zeta(s) + F(1,s,m), the latter from the convergent series.
template <typename Real>
std::complex<Real> hurwitz_zeta_series(const std::complex<Real>& s, long m, double tol,
                                       const std::complex<Real>& zeta_s) {
  if (!(s.real() > Real(1))) throw DomainError("Re s > 1 required (Hurwitz zeta series)");
  if (m < 2) throw UsageError("Hurwitz zeta series needs m >= 2");
  constexpr long kInternalCap = 200000;
  const auto F = evaluate_F_convergent(std::complex<Real>(1), s, m, tol, kInternalCap);
  return zeta_s + F.value;
}

/// Index of the smallest |term| over 1 <= n <= max_order; max_order itself
/// when a is a positive integer. The scan ends early at the factorial limit
/// or where the coefficients have lost their digits to cancellation.
template <typename Real>
long select_truncation(const std::complex<Real>& z, const std::complex<Real>& s,
                       const std::complex<Real>& a, long max_order) {
  detail::require_expansion_domain(z, s, a);
  if (max_order < 1) throw UsageError("max_order must be >= 1");
  if (is_positive_integer(a)) return max_order;
  const long top = std::min<long>(max_order, kMaxFactorialOrder);
  const auto table = CoefficientTable<Real>::build(z, a, static_cast<unsigned>(top + 1),
                                                   CoefficientPath::explicit_formula);
  const auto w = detail::expansion_weights(s, a, static_cast<unsigned>(top + 1));
  // Stop where cancellation leaves fewer than ~3 reliable digits in C_n.
  long usable = top;
  for (long n = 1; n <= top; ++n) {
    if (table.condition()[n] * 1.0e-34L > 1.0e-3L) {
      usable = std::max<long>(1, n - 1);
      break;
    }
  }
  const ComplexVector<Real> terms = table.C().cwiseProduct(w).head(usable + 1);
  return static_cast<long>(detail::smallest_index(terms, 1));
}

}  // namespace lerch
