#include "test_support.hpp"

#include <boost/math/constants/constants.hpp>

#include "lerch/expansion.hpp"
#include "lerch/oracles.hpp"

using lerch::QuadratureSettings;

namespace {
const double kPi = boost::math::constants::pi<double>();
}

TEST_CASE("compensated summation recovers cancelled digits") {
  lerch::CompensatedSum<double> acc;
  acc.add(1.0);
  for (int i = 0; i < 10; ++i) acc.add(1e-16);
  acc.add(-1.0);
  CHECK(acc.value() == doctest::Approx(1e-15).epsilon(1e-12));
  Eigen::VectorXd v(3);
  v << 1e100, 1.0, -1e100;
  CHECK(lerch::compensated_sum(v) == 1.0);
}

TEST_CASE("gamma function") {
  CHECK(lerch::gamma(Cd(2)) == Cd(1));
  CHECK(lerch::gamma(Cd(5)) == Cd(24));
  CHECK_REL(lerch::gamma(Cd(0.5)), Cd(std::sqrt(kPi)), 1e-14);
  CHECK_REL(lerch::gamma(Cd(0.5, 1)), Cd(0.30069461726065581622, -0.42496787943312381261), 1e-13);
  CHECK_REL(lerch::gamma(Cd(2.5, -0.7)), Cd(1.033758427686083171, -0.57187093678596296045), 1e-13);
  CHECK_REL(lerch::gamma(Cd(0.3)), Cd(2.9915689876875907446), 1e-13);
  CHECK_REL(lerch::gamma(Cd(-1.5, 0.5)), Cd(0.93791666278788505097, 0.34920566814780486859), 1e-13);
  CHECK_REL(lerch::gamma(Cd(7.25)), Cd(1155.3810139199896872), 1e-13);
  CHECK_THROWS_AS(lerch::gamma(Cd(-2)), lerch::DomainError);
  CHECK_THROWS_AS(lerch::gamma(Cd(0)), lerch::DomainError);
}

TEST_CASE("eta_direct") {
  CHECK(lerch::eta_direct(Cd(2), Cd(1), 3) == Cd(20.0 / 3));
  CHECK(lerch::eta_direct(Cd(2), Cd(-1), 10) == Cd(18434));
  CHECK(lerch::eta_direct(Cd(1), Cd(1), 4) == Cd(25.0 / 12));
  CHECK_REL(lerch::eta_direct(Cd(0, 1), Cd(0.5), 2), Cd(0, 1) + Cd(-1) / std::sqrt(2.0), 1e-15);
  CHECK_THROWS_AS(lerch::eta_direct(Cd(2), Cd(1), 0), lerch::UsageError);
}

TEST_CASE("eta(2,-1,m) closed form") {
  for (unsigned long m = 1; m <= 40; ++m) {
    CHECK(lerch::eta_direct(Cd(2), Cd(-1), m) == Cd(static_cast<double>((m - 1) * (1ULL << (m + 1)) + 2)));
  }
}

TEST_CASE("power series for Phi") {
  CHECK(lerch::phi_series(Cd(0), Cd(2), Cd(3)) == Cd(1.0 / 9));
  CHECK_REL(lerch::phi_series(Cd(0.5), Cd(1), Cd(1)), Cd(2 * std::log(2.0)), 1e-14);
  CHECK_REL(lerch::polylog_series(Cd(4), Cd(1), 1e-13), Cd(std::pow(kPi, 4) / 90), 1e-12);
  CHECK_REL(lerch::polylog_series(Cd(2), Cd(0.5)), Cd(kPi * kPi / 12 - std::log(2.0) * std::log(2.0) / 2),
            1e-14);
  CHECK_THROWS_AS(lerch::phi_series(Cd(1.5), Cd(2), Cd(1)), lerch::DomainError);
  CHECK_THROWS_AS(lerch::phi_series(Cd(1), Cd(1), Cd(1)), lerch::DomainError);
  CHECK_THROWS_AS(lerch::phi_series(Cd(0.5), Cd(1), Cd(-2)), lerch::DomainError);
}

TEST_CASE("power series vs classic expansion at a = 2.5") {
  const auto cl = lerch::expand_phi_classic(Cd(0.5), Cd(2), Cd(2.5), 6);
  CHECK(std::abs(lerch::phi_series(Cd(0.5), Cd(2), Cd(2.5), 1e-14) - cl.value) <=
        cl.remainder_estimate);
}

TEST_CASE("F by quadrature, frozen values") {
  struct Case {
    Cd z, s, a, F;
  };
  const Case cases[] = {
      {2, 1, 5.5, -0.2977547716975847992621},
      {2, 2, {30, 1}, {-0.00128222332333377519422, 0.00009264850736780429823592}},
      {5, 3, {50, 1}, {-0.000002154168257515091612614, 1.327890097402467657206e-7}},
      {2, 0.5, 3.25, -0.6063234742224859190414},
      {{1.5, 0.5}, 1.5, {4, 0.5}, {-0.3623289722403920407953, 0.4175603254996509571656}},
      {1, 2, 4.5, -1.396208963809216061296},
      {2, 1, 1.05, -0.05837764519081292266214},
      {0.3, 1.5, 2.5, -6.5520195187545394023},
      {-0.5, 2, 6, 28.718888888888888889},
      {-0.5, 1.5, 2.5, {0.19581379322333698702, -2.4318099218859972302}},
  };
  QuadratureSettings q;
  q.abs_tol = 1e-20;
  q.rel_tol = 1e-13;
  for (const auto& c : cases) {
    CAPTURE(c.z);
    CAPTURE(c.s);
    CAPTURE(c.a);
    CHECK_REL(lerch::F_quadrature(c.z, c.s, c.a), c.F, 1e-9);
    CHECK_REL(lerch::F_quadrature(c.z, c.s, c.a, q), c.F, 1e-12);
  }
}

TEST_CASE("F by quadrature, long double at tight tolerance") {
  QuadratureSettings q;
  q.abs_tol = 1e-40;
  q.rel_tol = 1e-18;
  q.max_subdivisions = 100000;
  const Cl v = lerch::F_quadrature(Cl(5), Cl(3), Cl(50, 1), q);
  const Cl want(-0.000002154168257515091612614L, 1.327890097402467657206e-7L);
  CHECK(rel(v, want) <= 1e-17);
}

TEST_CASE("quadrature spec examples") {
  CHECK_REL(lerch::F_quadrature(Cd(2), Cd(1.5), Cd(7)),
            -std::pow(2.0, -7) * lerch::eta_direct(Cd(2), Cd(1.5), 6), 1e-8);
  const Cd z(0.5), s(2), a(3);
  CHECK_REL(lerch::F_quadrature(z, s, a),
            lerch::phi_series(z, s, a) - lerch::polylog_series(s, z) * std::pow(z, -a), 1e-9);
  CHECK_REL(lerch::F_quadrature(Cd(1), Cd(2), Cd(4)), Cd(-(1 + 0.25 + 1.0 / 9)), 1e-10);
}

TEST_CASE("quadrature errors") {
  QuadratureSettings bad;
  bad.abs_tol = 0;
  CHECK_THROWS_AS(lerch::F_quadrature(Cd(2), Cd(1), Cd(3.5), bad), lerch::UsageError);
  QuadratureSettings tiny;
  tiny.max_subdivisions = 1;
  tiny.abs_tol = 1e-30;
  tiny.rel_tol = 1e-30;
  try {
    lerch::F_quadrature(Cd(2), Cd(1), Cd(3.5), tiny);
    FAIL("expected an accuracy error");
  } catch (const lerch::AccuracyError& e) {
    CHECK(std::abs(e.best()) > 0);
  }
  CHECK_THROWS_AS(lerch::F_quadrature(Cd(2), Cd(-1), Cd(3.5)), lerch::DomainError);
  CHECK_THROWS_AS(lerch::F_quadrature(Cd(2), Cd(1), Cd(-3.5)), lerch::DomainError);
  CHECK_THROWS_AS(lerch::F_quadrature(Cd(0), Cd(1), Cd(3.5)), lerch::DomainError);
}

TEST_CASE("oracle triangle at integer a") {
  for (double z : {1.0, 2.0, 5.0}) {
    for (double s : {1.0, 2.0, 0.5}) {
      for (long m : {3L, 7L, 15L}) {
        CAPTURE(z);
        CAPTURE(s);
        CAPTURE(m);
        const Cd direct = -lerch::eta_direct(Cd(z), Cd(s), m - 1) / std::pow(z, m);
        CHECK_REL(lerch::F_quadrature(Cd(z), Cd(s), Cd(m)), direct, 1e-8);
        CHECK_REL(lerch::evaluate_F_convergent(Cd(z), Cd(s), m, 1e-14, 20000).value, direct, 1e-8);
      }
    }
  }
}

TEST_CASE("oracle triangle inside the unit disc") {
  for (double z : {0.3, -0.5}) {
    for (double s : {1.5, 2.0}) {
      for (double a : {2.5, 6.0}) {
        const Cd series = lerch::phi_series(Cd(z), Cd(s), Cd(a)) -
                          lerch::polylog_series(Cd(s), Cd(z)) * lerch::principal_pow(Cd(z), Cd(-a));
        CHECK_REL(lerch::F_quadrature(Cd(z), Cd(s), Cd(a)), series, 1e-8);
      }
    }
  }
}

TEST_CASE("summation-by-parts residual") {
  const double r1 = lerch::summation_by_parts_residual(Cd(2), Cd(2), 10, 1);
  CHECK(std::isfinite(r1));
  CHECK(r1 > 0);
  // The inner series in n diverges for these inputs: the residual grows with depth.
  CHECK(lerch::summation_by_parts_residual(Cd(2), Cd(2), 10, 30) >
        lerch::summation_by_parts_residual(Cd(2), Cd(2), 10, 10));
  CHECK_THROWS_AS(lerch::summation_by_parts_residual(Cd(0.5), Cd(2), 10, 3), lerch::DomainError);
  CHECK_THROWS_AS(lerch::summation_by_parts_residual(Cd(2), Cd(2), 10, 0), lerch::UsageError);
}

TEST_CASE("Hurwitz zeta by tail summation") {
  CHECK_REL(lerch::hurwitz_zeta_direct(Cd(2), 1), Cd(kPi * kPi / 6), 1e-14);
  CHECK_REL(lerch::hurwitz_zeta_direct(Cd(2), 2), Cd(kPi * kPi / 6 - 1), 1e-14);
  CHECK_REL(lerch::hurwitz_zeta_direct(Cd(4), 1), Cd(std::pow(kPi, 4) / 90), 1e-14);
  for (double s : {2.0, 3.5}) {
    for (unsigned long m : {1UL, 4UL, 9UL}) {
      const Cd d = lerch::hurwitz_zeta_direct(Cd(s), m) - lerch::hurwitz_zeta_direct(Cd(s), m + 1);
      CHECK_REL(d, Cd(std::pow(static_cast<double>(m), -s)), 1e-12);
    }
  }
  CHECK_THROWS_AS(lerch::hurwitz_zeta_direct(Cd(1), 1), lerch::DomainError);
  CHECK_THROWS_AS(lerch::hurwitz_zeta_direct(Cd(1.0001), 1, 1e-40), lerch::AccuracyError);
}

TEST_CASE("Euler-Maclaurin form at z = 1") {
  const Cd zeta2(kPi * kPi / 6), zeta3 = lerch::hurwitz_zeta_direct(Cd(3), 1);
  auto within = [](double s, unsigned long m, unsigned n, Cd zeta_s) {
    const auto r = lerch::euler_maclaurin_F1(s, m, n, zeta_s);
    const Cd ref = -lerch::eta_direct(Cd(1), Cd(s), m - 1);
    return std::abs(r.value - ref) <= r.bound;
  };
  CHECK(within(2, 10, 3, zeta2));
  CHECK(within(3, 5, 2, zeta3));
  CHECK(within(2, 2, 1, zeta2));
  CHECK(lerch::euler_maclaurin_F1(2.0, 10, 3, zeta2).bound < 1e-10);
  CHECK_THROWS_AS(lerch::euler_maclaurin_F1(1.0, 10, 3, zeta2), lerch::DomainError);
}
