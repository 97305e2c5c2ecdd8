#include "test_support.hpp"

#include <boost/math/constants/constants.hpp>

#include "lerch/expansion.hpp"
#include "lerch/json_io.hpp"
#include "lerch/oracles.hpp"

using lerch::CoefficientPath;

namespace {

Cd direct_F(Cd z, Cd s, long m) { return -lerch::eta_direct(z, s, m - 1) / lerch::ipow(z, m); }

bool has_note(const std::vector<std::string>& notes, const std::string& text) {
  for (const auto& n : notes) {
    if (n.find(text) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("expand_F single term") {
  const auto r = lerch::expand_F(Cd(2), Cd(1), Cd(5), 1);
  CHECK(r.value == Cd(-0.1875));
  CHECK(r.order_used == 1);
  CHECK(r.terms.size() == 1);
  CHECK(r.remainder_estimate > 0);
}

TEST_CASE("expand_F result invariants") {
  for (Cd a : {Cd(5.5), Cd(12), Cd(30, 1)}) {
    const auto r = lerch::expand_F(Cd(2), Cd(1.5), a, 12);
    CHECK(r.terms.size() == r.order_used);
    CHECK(r.remainder_estimate >= 0);
    CHECK(r.partial_sums()(r.terms.size() - 1) == r.value);
    CHECK_REL(Cd(r.terms.sum()), r.value, 1e-14);
    CHECK(has_note(r.diagnostics, "heuristic"));
    CHECK(has_note(r.diagnostics, "smallest term index"));
  }
}

TEST_CASE("expand_F terms are C_n (s)_n / a^(n+s)") {
  const Cd z(2), s(1.5), a(7.5, 0.5);
  const auto r = lerch::expand_F(z, s, a, 8);
  for (unsigned n = 0; n < 8; ++n) {
    const Cd want = lerch::coeff_C(n, z, a) * lerch::pochhammer(s, n) * std::exp(-(s + double(n)) * std::log(a));
    CHECK_REL(r.terms(n), want, 1e-13);
  }
}

TEST_CASE("expand_F relative errors at table cells") {
  auto err = [](Cd z, Cd s, long a, long n) {
    return std::abs(1.0 - lerch::expand_F(z, s, Cd(a), n).value / direct_F(z, s, a));
  };
  CHECK(err(2, 1, 5, 5) == doctest::Approx(7.87e-2).epsilon(0.01));
  CHECK(err(5, 2, 20, 10) == doctest::Approx(1.21e-7).epsilon(0.01));
}

TEST_CASE("expand_F at integer a: integer-direct and explicit terms agree") {
  const auto a = lerch::expand_F(Cd(2), Cd(1), Cd(10), 20, CoefficientPath::integer_direct);
  const auto b = lerch::expand_F(Cd(2), Cd(1), Cd(10), 20, CoefficientPath::explicit_formula);
  for (int n = 0; n < 20; ++n) CHECK_REL(a.terms(n), b.terms(n), 1e-12);
}

TEST_CASE("expand_F domain") {
  CHECK_THROWS_WITH_AS(lerch::expand_F(Cd(2), Cd(1), Cd(1), 5), "Re a > 1 required (large-a expansion of F)",
                       lerch::DomainError);
  CHECK_THROWS_AS(lerch::expand_F(Cd(2), Cd(0), Cd(5), 5), lerch::DomainError);
  CHECK_THROWS_AS(lerch::expand_F(Cd(0), Cd(1), Cd(5), 5), lerch::DomainError);
  CHECK_THROWS_AS(lerch::expand_F(Cd(2), Cd(1), Cd(5), 0), lerch::UsageError);
}

TEST_CASE("asymptotic order of the error") {
  auto err = [](long a) {
    const Cl z(2), s(1);
    const Cl ref = -lerch::eta_direct(z, s, a - 1) / lerch::ipow(z, a);
    return static_cast<double>(std::abs(lerch::expand_F(z, s, Cl(a), 4).value - ref));
  };
  const double ratio = err(32) / err(16);
  CHECK(ratio >= 0.25 / 32);
  CHECK(ratio <= 4.0 / 32);
}

TEST_CASE("convergent series examples") {
  CHECK_REL(lerch::evaluate_F_convergent(Cd(2), Cd(1), 3, 1e-15, 20000).value, Cd(-0.5), 1e-13);
  CHECK_REL(lerch::evaluate_F_convergent(Cd(1), Cd(2), 2, 1e-15, 20000).value, Cd(-1), 1e-13);
  CHECK_REL(lerch::evaluate_F_convergent(Cd(5), Cd(2), 10, 1e-14, 20000).value, direct_F(5, 2, 10),
            1e-10);
}

TEST_CASE("convergent series on the acceptance grid") {
  for (double z : {1.0, 2.0, 5.0}) {
    for (double s : {1.0, 2.0, 0.5}) {
      for (long m : {5L, 10L, 20L}) {
        CAPTURE(z);
        CAPTURE(s);
        CAPTURE(m);
        const auto r = lerch::evaluate_F_convergent(Cd(z), Cd(s), m, 1e-14, 20000);
        CHECK_REL(r.value, direct_F(z, s, m), 1e-10);
        CHECK(has_note(r.diagnostics, "three consecutive"));
      }
    }
  }
}

TEST_CASE("convergent series identity for complex z and s") {
  const Cd z(1.2, 0.9), s(0.7, 0.3);
  CHECK_REL(lerch::evaluate_F_convergent(z, s, 6, 1e-15, 20000).value, direct_F(z, s, 6), 1e-10);
}

TEST_CASE("convergent series errors") {
  CHECK_THROWS_AS(lerch::evaluate_F_convergent(Cd(2), Cd(1), 1, 1e-14, 100), lerch::UsageError);
  CHECK_THROWS_AS(lerch::evaluate_F_convergent(Cd(0.5), Cd(1), 5, 1e-14, 100), lerch::DomainError);
  try {
    lerch::evaluate_F_convergent(Cd(1), Cd(1), 20, 1e-14, 5);
    FAIL("expected truncation");
  } catch (const lerch::TruncationError& e) {
    CHECK(std::abs(e.best()) > 0);
  }
}

TEST_CASE("eta by every method") {
  using namespace lerch::eta_method;
  CHECK(lerch::evaluate_eta(Cd(2), Cd(1), 3, Direct{}) == Cd(20.0 / 3));
  CHECK(lerch::evaluate_eta(Cd(2), Cd(-1), 5, Direct{}) == Cd(258));
  CHECK_REL(lerch::evaluate_eta(Cd(2), Cd(1), 20, Convergent{1e-12, 20000}),
            lerch::eta_direct(Cd(2), Cd(1), 20), 1e-10);
  CHECK_REL(lerch::evaluate_eta(Cd(2), Cd(1), 20, Asymptotic{3000}),
            lerch::eta_direct(Cd(2), Cd(1), 20), 1e-12);
  // Shallow order: a genuine asymptotic approximation, good to a few digits at m = 40.
  CHECK_REL(lerch::evaluate_eta(Cd(2), Cd(1), 40, Asymptotic{10}),
            lerch::eta_direct(Cd(2), Cd(1), 40), 1e-4);
}

TEST_CASE("eta recursion") {
  using namespace lerch::eta_method;
  const lerch::EtaMethod methods[] = {Direct{}, Convergent{1e-16, 20000}, Asymptotic{4000}};
  for (const auto& method : methods) {
    for (double z : {2.0, 5.0}) {
      Cd prev = lerch::evaluate_eta(Cd(z), Cd(2), 1, method);
      for (long m = 2; m <= 50; ++m) {
        const Cd cur = lerch::evaluate_eta(Cd(z), Cd(2), m, method);
        CHECK_REL(cur - prev, lerch::ipow(Cd(z), m) / double(m * m), 1e-12);
        prev = cur;
      }
    }
  }
}

TEST_CASE("identity at integer a") {
  for (Cd z : {Cd(2), Cd(3, 1)}) {
    for (long m : {2L, 4L, 9L}) {
      Cd sum = 0;
      for (long k = 1; k < m; ++k) sum += lerch::ipow(z, k) / double(k * k);
      CHECK_REL(lerch::evaluate_F_convergent(z, Cd(2), m, 1e-16, 20000).value,
                -sum / lerch::ipow(z, m), 1e-10);
    }
  }
}

TEST_CASE("classic expansion of Phi") {
  const auto r1 = lerch::expand_phi_classic(Cd(0.5), Cd(2), Cd(50), 8);
  CHECK(std::abs(r1.value - lerch::phi_series(Cd(0.5), Cd(2), Cd(50))) <= r1.remainder_estimate);
  const auto r2 = lerch::expand_phi_classic(Cd(-1), Cd(1), Cd(30), 6);
  // |z| = 1 with s = 1 is outside the power series: sum the alternating series pairwise.
  Cd ref = 0;
  for (long n = 200000; n >= 0; --n) ref += (n % 2 ? -1.0 : 1.0) / (30.0 + n);
  CHECK(std::abs(r2.value - ref) <= r2.remainder_estimate + 1e-5);
  CHECK(lerch::expand_phi_classic(Cd(0), Cd(2), Cd(7), 1).value == Cd(1.0 / 49));
  CHECK_THROWS_AS(lerch::expand_phi_classic(Cd(2), Cd(2), Cd(7), 3), lerch::DomainError);
  CHECK_THROWS_AS(lerch::expand_phi_classic(Cd(1), Cd(2), Cd(7), 3), lerch::DomainError);
}

TEST_CASE("split into separable parts") {
  const auto [p1, p2] = lerch::split_F(Cd(2), Cd(1), Cd(5), 3);
  CHECK_REL(p1 + p2, lerch::expand_F(Cd(2), Cd(1), Cd(5), 3, CoefficientPath::explicit_formula).value,
            1e-13);
  const auto [q1, q2] = lerch::split_F(Cd(5), Cd(2), Cd(40), 5);
  CHECK(std::abs(q2) / std::abs(q1) < 1e-20);
  const auto [r1, r2] = lerch::split_F(Cd(1.05), Cd(1), Cd(10), 5);
  CHECK(std::abs(r2) / std::abs(r1) > 0.1);
  for (Cd a : {Cd(3.5), Cd(12, 1), Cd(25)}) {
    for (long N : {1L, 7L, 15L}) {
      // Past the smallest term the parts cancel (|u|, |v| ~ 470 against a sum of 0.18 at
      // a = 3.5, N = 15), so the identity is measured against the size of the parts.
      const auto [u, v] = lerch::split_F(Cd(3), Cd(1.5), a, N);
      const Cd e = lerch::expand_F(Cd(3), Cd(1.5), a, N, CoefficientPath::explicit_formula).value;
      CHECK(std::abs(u + v - e) <= 1e-13 * std::max(std::abs(u), std::abs(v)));
    }
  }
  CHECK_THROWS_AS(lerch::split_F(Cd(1), Cd(1), Cd(5), 3), lerch::DomainError);
}

TEST_CASE("Hurwitz zeta series") {
  const double pi = boost::math::constants::pi<double>();
  CHECK_REL(lerch::hurwitz_zeta_series(Cd(2), 2, 1e-15, Cd(pi * pi / 6)), Cd(pi * pi / 6 - 1), 1e-12);
  for (double s : {2.0, 3.0}) {
    const Cd zeta_s = lerch::hurwitz_zeta_direct(Cd(s), 1);
    for (long m : {2L, 5L, 10L}) {
      CHECK_REL(lerch::hurwitz_zeta_series(Cd(s), m, 1e-15, zeta_s),
                lerch::hurwitz_zeta_direct(Cd(s), static_cast<unsigned long>(m)), 1e-8);
    }
  }
  CHECK_THROWS_AS(lerch::hurwitz_zeta_series(Cd(1), 3, 1e-15, Cd(0)), lerch::DomainError);
}

TEST_CASE("select_truncation") {
  CHECK(lerch::select_truncation(Cd(2), Cd(1), Cd(20), 30) == 30);
  CHECK(lerch::select_truncation(Cd(2), Cd(1), Cd(1.5), 60) == 13);
  CHECK(lerch::select_truncation(Cd(2), Cd(1), Cd(2.5), 60) == 23);
  CHECK(lerch::select_truncation(Cd(5), Cd(2), Cd(1.5), 60) == 7);
  // Smallest over the scanned range.
  const long n = lerch::select_truncation(Cd(2), Cd(1), Cd(5.5), 40);
  const auto r = lerch::expand_F(Cd(2), Cd(1), Cd(5.5), 41, CoefficientPath::explicit_formula);
  for (int k = 1; k <= 40; ++k) CHECK(std::abs(r.terms(n)) <= std::abs(r.terms(k)));
  CHECK(lerch::select_truncation(Cd(5), Cd(2), Cd(12.5), 150) >
        lerch::select_truncation(Cd(2), Cd(1), Cd(5.5), 150));
}

TEST_CASE("expansion JSON") {
  const auto r = lerch::expand_F(Cd(2), Cd(1), Cd(5), 1);
  const auto j = lerch::to_json(r);
  CHECK(j.at("value").dump() == "[-0.1875,0.0]");
  CHECK(j.at("order") == 1);
  CHECK(j.at("terms").size() == 1);
  CHECK(j.at("diagnostics").size() == r.diagnostics.size());
  CHECK(j.dump().rfind(R"({"value":)", 0) == 0);
}

TEST_CASE("long double expansion matches double") {
  const auto d = lerch::expand_F(Cd(5), Cd(3), Cd(50, 1), 15);
  const auto l = lerch::expand_F(Cl(5), Cl(3), Cl(50, 1), 15);
  CHECK(rel(Cd(double(l.value.real()), double(l.value.imag())), d.value) < 1e-15);
}
