#include "lerch/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>

#include "lerch/expansion.hpp"
#include "lerch/oracles.hpp"
#include "lerch/validation.hpp"

namespace lerch {
namespace {

using Cd = std::complex<double>;
using Wide = std::complex<long double>;

template <typename T>
double rel_diff(const std::complex<T>& x, const std::complex<T>& y) {
  const T scale = std::max(std::abs(x), std::abs(y));
  return scale == T(0) ? 0.0 : static_cast<double>(std::abs(x - y) / scale);
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string cstr(Cd v) {
  char buf[64];
  if (v.imag() == 0) {
    std::snprintf(buf, sizeof buf, "%g", v.real());
  } else {
    std::snprintf(buf, sizeof buf, "%g%+gi", v.real(), v.imag());
  }
  return buf;
}

// Tracks the worst relative deviation and where it happened.
struct Worst {
  double value = 0;
  std::string where;
  bool failed = false;

  void update(double v, double limit, const std::function<std::string()>& label) {
    if (!(v <= limit)) failed = true;  // NaN counts as failure
    if (!(v <= value)) {
      value = v;
      where = label();
    }
  }

  CheckResult result(std::string name, double limit) const {
    return {std::move(name), !failed,
            "worst " + sci(value) + " (limit " + sci(limit) + ")" +
                (where.empty() ? "" : " at " + where)};
  }
};

CheckResult guarded(const std::string& name, const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, false, std::string("error: ") + e.what()};
  }
}

}  // namespace

CheckResult check_coefficient_paths() {
  const std::string name = "coefficient path agreement";
  return guarded(name, [&] {
    constexpr double kLimit = 1e-9;
    constexpr unsigned kCount = 21;
    Worst worst;
    const Cd zs[] = {2.0, 5.0, 1.5};
    const Cd as[] = {5.0, 10.0, {10.0, 1.0}};
    for (Cd z : zs) {
      for (Cd a : as) {
        const auto ex = CoefficientTable<double>::build(z, a, kCount, CoefficientPath::explicit_formula);
        const auto rec = CoefficientTable<double>::build(z, a, kCount, CoefficientPath::recurrence);
        for (unsigned n = 0; n < kCount; ++n) {
          auto label = [&] { return "z=" + cstr(z) + " a=" + cstr(a) + " n=" + std::to_string(n); };
          worst.update(rel_diff(ex.C()(n), rec.C()(n)), kLimit, label);
        }
        if (is_positive_integer(a)) {
          const auto dir =
              CoefficientTable<double>::build(z, a, kCount, CoefficientPath::integer_direct);
          for (unsigned n = 0; n < kCount; ++n) {
            auto label = [&] {
              return "integer-direct z=" + cstr(z) + " a=" + cstr(a) + " n=" + std::to_string(n);
            };
            worst.update(rel_diff(ex.C()(n), dir.C()(n)), kLimit, label);
          }
        }
      }
    }
    for (Cd a : {Cd(3.0), Cd(7.5)}) {
      const auto ber = CoefficientTable<double>::build(1.0, a, 16, CoefficientPath::explicit_formula);
      const auto rec = CoefficientTable<double>::build(1.0, a, 16, CoefficientPath::recurrence);
      for (unsigned n = 0; n < 16; ++n) {
        auto label = [&] { return "z=1 a=" + cstr(a) + " n=" + std::to_string(n); };
        worst.update(rel_diff(ber.C()(n), rec.C()(n)), kLimit, label);
      }
    }
    return worst.result(name, kLimit);
  });
}

CheckResult check_oracle_triangle() {
  const std::string name = "oracle triangle";
  return guarded(name, [&] {
    constexpr double kLimit = 1e-8;
    Worst worst;
    for (double z : {1.0, 2.0, 5.0}) {
      for (double s : {1.0, 2.0, 0.5}) {
        for (long m : {3L, 7L, 15L}) {
          const Cd zc(z), sc(s), ac(static_cast<double>(m));
          const Cd direct = -eta_direct(zc, sc, m - 1) / ipow(zc, m);
          const Cd quad = F_quadrature(zc, sc, ac);
          const Cd conv = evaluate_F_convergent(zc, sc, m, 1e-14, 20000).value;
          auto label = [&] {
            return "z=" + cstr(zc) + " s=" + cstr(sc) + " m=" + std::to_string(m);
          };
          worst.update(rel_diff(quad, direct), kLimit, label);
          worst.update(rel_diff(conv, direct), kLimit, label);
        }
      }
    }
    for (double z : {0.3, -0.5}) {
      for (double s : {1.5, 2.0}) {
        for (double a : {2.5, 6.0}) {
          const Cd zc(z), sc(s), ac(a);
          const Cd series =
              phi_series(zc, sc, ac) - polylog_series(sc, zc) * principal_pow(zc, -ac);
          const Cd quad = F_quadrature(zc, sc, ac);
          auto label = [&] { return "z=" + cstr(zc) + " s=" + cstr(sc) + " a=" + cstr(ac); };
          worst.update(rel_diff(quad, series), kLimit, label);
        }
      }
    }
    return worst.result(name, kLimit);
  });
}

CheckResult check_eta_recursion() {
  const std::string name = "eta recursion";
  return guarded(name, [&] {
    constexpr double kLimit = 1e-12;
    Worst worst;
    // The integer-a expansion converges, so a deep order makes it exact to rounding.
    const EtaMethod methods[] = {eta_method::Direct{}, eta_method::Convergent{1e-16, 20000},
                                 eta_method::Asymptotic{4000}};
    const char* method_names[] = {"direct", "convergent", "asymptotic"};
    for (double z : {1.0, 2.0, 5.0}) {
      for (double s : {1.0, 2.0}) {
        if (z == 1.0 && s == 2.0) continue;  // eta(1,2,m) -> zeta(2): difference drowns in rounding
        const Cd zc(z), sc(s);
        for (int k = 0; k < 3; ++k) {
          Cd prev = evaluate_eta(zc, sc, 1, methods[k]);
          for (long m = 2; m <= 50; ++m) {
            const Cd cur = evaluate_eta(zc, sc, m, methods[k]);
            const Cd expected = ipow(zc, m) / std::pow(static_cast<double>(m), s);
            auto label = [&] {
              return std::string(method_names[k]) + " z=" + cstr(zc) + " s=" + cstr(sc) +
                     " m=" + std::to_string(m);
            };
            worst.update(std::abs((cur - prev) - expected) / std::abs(expected), kLimit, label);
            prev = cur;
          }
        }
      }
    }
    return worst.result(name, kLimit);
  });
}

CheckResult check_by_parts_residual() {
  const std::string name = "summation-by-parts residual";
  return guarded(name, [&] {
    constexpr double kLimit = 1e-8;
    bool ok = true;
    std::string detail;
    for (auto [z, s, m] : {std::tuple{2.0, 2.0, 10UL}, std::tuple{3.0, 1.0, 5UL}}) {
      std::vector<double> r;
      for (unsigned d = 1; d <= 30; ++d) r.push_back(summation_by_parts_residual(Cd(z), Cd(s), m, d));
      bool monotone = true;
      for (std::size_t d = 3; d < r.size(); ++d) monotone = monotone && r[d] <= r[d - 1];
      const bool small = r.back() < kLimit;
      ok = ok && monotone && small;
      if (!detail.empty()) detail += "; ";
      detail += "(" + cstr(z) + "," + cstr(s) + "," + std::to_string(m) + ") depth 30 residual " +
                sci(r.back()) + (small ? "" : " >= 1e-08") +
                (monotone ? "" : ", increases past depth 3");
    }
    return CheckResult{name, ok, detail};
  });
}

CheckResult check_eta_closed_form() {
  const std::string name = "eta closed form";
  return guarded(name, [&] {
    for (unsigned long m = 1; m <= 40; ++m) {
      const Cd v = eta_direct(Cd(2), Cd(-1), m);
      const double exact = static_cast<double>((m - 1) * (1ULL << (m + 1)) + 2);
      if (v != Cd(exact)) {
        return CheckResult{name, false, "m=" + std::to_string(m) + " gives " + cstr(v)};
      }
    }
    return CheckResult{name, true, "exact for m = 1..40"};
  });
}

CheckResult check_convergent_series() {
  const std::string name = "convergent series";
  return guarded(name, [&] {
    constexpr double kLimit = 1e-10;
    Worst worst;
    for (double z : {1.0, 2.0, 5.0}) {
      for (double s : {1.0, 2.0, 0.5}) {
        for (long m : {5L, 10L, 20L}) {
          const Cd zc(z), sc(s);
          const Cd ref = -eta_direct(zc, sc, m - 1) / ipow(zc, m);
          const Cd val = evaluate_F_convergent(zc, sc, m, 1e-14, 20000).value;
          worst.update(std::abs(val - ref) / std::abs(ref), kLimit, [&] {
            return "z=" + cstr(zc) + " s=" + cstr(sc) + " m=" + std::to_string(m);
          });
        }
      }
    }
    return worst.result(name, kLimit);
  });
}

CheckResult check_asymptotic_order() {
  const std::string name = "asymptotic order";
  return guarded(name, [&] {
    auto err = [](long a) {
      const Wide z(2), s(1), aw(static_cast<long double>(a));
      const Wide ref = -eta_direct(z, s, a - 1) / ipow(z, a);
      return std::abs(expand_F(z, s, aw, 4).value - ref);
    };
    const double ratio = static_cast<double>(err(32) / err(16));
    const double target = std::ldexp(1.0, -5);
    const bool ok = ratio >= 0.25 * target && ratio <= 4 * target;
    return CheckResult{name, ok,
                       "err(32)/err(16) = " + sci(ratio) + ", expected within [" +
                           sci(0.25 * target) + ", " + sci(4 * target) + "]"};
  });
}

CheckResult check_hurwitz_series() {
  const std::string name = "hurwitz series";
  return guarded(name, [&] {
    constexpr double kLimit = 1e-8;
    Worst worst;
    for (double s : {2.0, 3.0}) {
      const Cd zeta_s = hurwitz_zeta_direct(Cd(s), 1);
      for (long m : {2L, 5L, 10L}) {
        const Cd series = hurwitz_zeta_series(Cd(s), m, 1e-15, zeta_s);
        const Cd direct = hurwitz_zeta_direct(Cd(s), static_cast<unsigned long>(m));
        worst.update(rel_diff(series, direct), kLimit,
                     [&] { return "s=" + cstr(s) + " m=" + std::to_string(m); });
      }
    }
    CheckResult r = worst.result(name, kLimit);
    for (auto [s, m, n] : {std::tuple{2.0, 10UL, 3U}, std::tuple{3.0, 5UL, 2U},
                           std::tuple{2.0, 2UL, 1U}}) {
      const Cd zeta_s = hurwitz_zeta_direct(Cd(s), 1);
      const auto em = euler_maclaurin_F1(s, m, n, zeta_s);
      const Cd ref = -eta_direct(Cd(1), Cd(s), m - 1);
      const double dev = std::abs(em.value - ref);
      if (!(dev <= em.bound)) {
        r.passed = false;
        r.detail += "; Euler-Maclaurin (s=" + cstr(s) + ", m=" + std::to_string(m) +
                    ", n=" + std::to_string(n) + ") off by " + sci(dev) + " > bound " +
                    sci(em.bound);
      }
    }
    if (r.passed) r.detail += "; Euler-Maclaurin values within their bounds";
    return r;
  });
}

CheckResult check_table1() {
  const std::string name = "table1";
  return guarded(name, [&] {
    const auto start = std::chrono::steady_clock::now();
    const auto report = reproduce_table1();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    int passed = 0;
    std::string first_fail;
    for (const auto& row : report.rows) {
      if (row.pass) {
        ++passed;
      } else if (first_fail.empty()) {
        first_fail = "; first miss z=" + cstr(row.z) + " s=" + cstr(row.s) + " a=" + cstr(row.a) +
                     " n=" + std::to_string(row.n) + ": " + sci(row.rel_error) + " vs " +
                     sci(row.printed_value.value_or(0));
      }
    }
    const bool fast = secs < 10.0;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%d/%zu cells match, %.2f s", passed, report.rows.size(), secs);
    return CheckResult{name, report.all_pass() && fast,
                       buf + first_fail + (fast ? "" : "; runtime exceeds 10 s")};
  });
}

std::vector<CheckResult> run_property_checks() {
  return {check_coefficient_paths(), check_oracle_triangle(), check_eta_recursion(),
          check_by_parts_residual()};
}

}  // namespace lerch
