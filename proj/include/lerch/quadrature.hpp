#pragma once

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <queue>
#include <vector>

#include "lerch/compensated_sum.hpp"

namespace lerch {

template <typename Real>
struct IntegrationResult {
  std::complex<Real> value;
  Real error_estimate = 0;
  int subdivisions = 0;
  bool converged = false;
};

namespace detail {

/// 15-point Kronrod rule with its embedded 7-point Gauss rule, on [-1, 1].
template <typename Real>
struct KronrodRule15 {
  Eigen::Array<Real, 15, 1> nodes;
  Eigen::Array<Real, 15, 1> kronrod_weights;
  Eigen::Array<Real, 15, 1> gauss_weights;  // zero on Kronrod-only nodes

  static const KronrodRule15& get() {
    static const KronrodRule15 rule = make();
    return rule;
  }

 private:
  static KronrodRule15 make() {
    namespace bq = boost::math::quadrature;
    const auto& x = bq::gauss_kronrod<Real, 15>::abscissa();
    const auto& wk = bq::gauss_kronrod<Real, 15>::weights();
    const auto& wg = bq::gauss<Real, 7>::weights();
    KronrodRule15 r;
    r.gauss_weights.setZero();
    r.nodes(7) = 0;
    r.kronrod_weights(7) = wk[0];
    r.gauss_weights(7) = wg[0];
    for (int i = 1; i < 8; ++i) {
      r.nodes(7 + i) = x[i];
      r.nodes(7 - i) = -x[i];
      r.kronrod_weights(7 + i) = r.kronrod_weights(7 - i) = wk[i];
      // Gauss nodes sit at the even Kronrod indices.
      if (i % 2 == 0) r.gauss_weights(7 + i) = r.gauss_weights(7 - i) = wg[i / 2];
    }
    return r;
  }
};

template <typename Real>
struct Panel {
  Real lo;
  Real hi;
  std::complex<Real> value;
  Real error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <typename Real, typename Integrand>
Panel<Real> evaluate_panel(Integrand& f, Real lo, Real hi) {
  using C = std::complex<Real>;
  const auto& rule = KronrodRule15<Real>::get();
  const Real center = (lo + hi) / 2;
  const Real half = (hi - lo) / 2;
  Eigen::Array<C, 15, 1> samples;
  for (int i = 0; i < 15; ++i) samples(i) = f(center + half * rule.nodes(i));
  const C kronrod = (samples * rule.kronrod_weights.template cast<C>()).sum() * half;
  const C gauss = (samples * rule.gauss_weights.template cast<C>()).sum() * half;
  const Real l1 = (samples.abs() * rule.kronrod_weights).sum() * half;
  Real error = std::abs(kronrod - gauss);
  // Below the rounding floor further bisection cannot help.
  if (error <= Real(50) * std::numeric_limits<Real>::epsilon() * l1) error = 0;
  return {lo, hi, kronrod, error};
}

}  // namespace detail

/// Globally adaptive Gauss–Kronrod (15/7) integration of a complex-valued
/// integrand over [breakpoints.front(), breakpoints.back()]. The worst panel
/// is bisected until the summed error estimate is at most
/// max(abs_tol, rel_tol |I|) or the subdivision budget is spent.
template <typename Real, typename Integrand>
IntegrationResult<Real> integrate_adaptive(Integrand&& f, const std::vector<Real>& breakpoints,
                                           Real abs_tol, Real rel_tol, int max_subdivisions) {
  using PanelT = detail::Panel<Real>;
  std::priority_queue<PanelT> queue;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (breakpoints[i + 1] > breakpoints[i]) {
      queue.push(detail::evaluate_panel(f, breakpoints[i], breakpoints[i + 1]));
    }
  }

  auto totals = [&queue]() {
    // priority_queue hides its container; copy out to sum in a fixed order.
    auto copy = queue;
    std::vector<PanelT> panels;
    panels.reserve(copy.size());
    while (!copy.empty()) {
      panels.push_back(copy.top());
      copy.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const PanelT& x, const PanelT& y) { return x.lo < y.lo; });
    CompensatedSum<std::complex<Real>> value;
    Real error = 0;
    for (const auto& p : panels) {
      value.add(p.value);
      error += p.error;
    }
    return std::pair{value.value(), error};
  };

  IntegrationResult<Real> result;
  int subdivisions = 0;
  auto [value, error] = totals();
  std::complex<Real> running_value = value;
  Real running_error = error;
  while (true) {
    const Real target = std::max(abs_tol, rel_tol * std::abs(running_value));
    if (running_error <= target || queue.top().error == Real(0)) {
      std::tie(value, error) = totals();
      if (error <= std::max(abs_tol, rel_tol * std::abs(value)) || queue.top().error == Real(0)) {
        result.converged = true;
        break;
      }
      running_value = value;
      running_error = error;
      continue;
    }
    if (subdivisions >= max_subdivisions) break;
    const PanelT worst = queue.top();
    const Real mid = (worst.lo + worst.hi) / 2;
    if (!(mid > worst.lo && mid < worst.hi)) break;  // panel at machine resolution
    queue.pop();
    const PanelT left = detail::evaluate_panel(f, worst.lo, mid);
    const PanelT right = detail::evaluate_panel(f, mid, worst.hi);
    queue.push(left);
    queue.push(right);
    ++subdivisions;
    running_value += left.value + right.value - worst.value;
    running_error += left.error + right.error - worst.error;
    if (subdivisions % 64 == 0) {
      std::tie(running_value, running_error) = totals();
    }
  }
  std::tie(value, error) = totals();
  result.value = value;
  result.error_estimate = error;
  result.subdivisions = subdivisions;
  if (!result.converged) {
    result.converged = error <= std::max(abs_tol, rel_tol * std::abs(value));
  }
  return result;
}

}  // namespace lerch
