#pragma once

// Self-checks over fixed parameter grids. Each returns a named verdict with a
// short detail line (worst deviation found, or the failing input).

#include <string>
#include <vector>

namespace lerch {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Explicit, recurrence and integer-direct C_n agree (n <= 20), including z = 1.
CheckResult check_coefficient_paths();
/// F at integer a: quadrature vs direct sum vs convergent series; F at |z| < 1:
/// quadrature vs power series.
CheckResult check_oracle_triangle();
/// eta(z,s,m) - eta(z,s,m-1) = z^m / m^s for every eta method, m <= 50.
CheckResult check_eta_recursion();
/// Summation-by-parts residual below 1e-8 at depth 30 and non-increasing past depth 3.
CheckResult check_by_parts_residual();
/// eta(2,-1,m) = (m-1) 2^(m+1) + 2 exactly, m <= 40.
CheckResult check_eta_closed_form();
/// Convergent series vs -z^(-m) eta(z,s,m-1), tol 1e-14, relative 1e-10.
CheckResult check_convergent_series();
/// Error ratio for a = 16 -> 32 at z=2, s=1, N=4 within a factor 4 of 2^-5.
CheckResult check_asymptotic_order();
/// Hurwitz zeta series vs tail summation; Euler–Maclaurin value within its bound.
CheckResult check_hurwitz_series();
/// Every relative-error table cell matches its printed value; runtime < 10 s.
CheckResult check_table1();

/// The checks run by `lerch check`.
std::vector<CheckResult> run_property_checks();

}  // namespace lerch
