// Coefficient kernels in binary128. The explicit and recurrence forms of
// C_n(z,a) subtract quantities up to ~1e15 times larger than the result for
// moderate z, a; these kernels keep enough digits that the rounded long double
// result is still accurate.

#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>

#include <algorithm>

#include "lerch/bernoulli.hpp"
#include "lerch/coefficients.hpp"

namespace lerch {

std::string_view to_string(CoefficientPath path) {
  switch (path) {
    case CoefficientPath::automatic:
      return "auto";
    case CoefficientPath::explicit_formula:
      return "explicit";
    case CoefficientPath::recurrence:
      return "recurrence";
    case CoefficientPath::integer_direct:
      return "integer-direct";
  }
  return "unknown";
}

CoefficientPath coefficient_path_from_string(std::string_view name) {
  if (name == "auto") return CoefficientPath::automatic;
  if (name == "explicit") return CoefficientPath::explicit_formula;
  if (name == "recurrence") return CoefficientPath::recurrence;
  if (name == "integer-direct") return CoefficientPath::integer_direct;
  throw UsageError("unknown coefficient path '" + std::string(name) + "'");
}

namespace detail {
namespace {

using Wide = boost::multiprecision::float128;
using WComplex = boost::multiprecision::complex128;

WComplex up(const WideComplex& v) {
  // +0 imaginary part keeps the negative real axis on Arg = pi.
  const long double im = v.imag() == 0.0L ? 0.0L : v.imag();
  return WComplex(Wide(v.real()), Wide(im));
}

WideComplex down(const WComplex& v) {
  return {v.real().convert_to<long double>(), v.imag().convert_to<long double>()};
}

long double magnitude(const WComplex& v) { return abs(v).convert_to<long double>(); }

std::vector<Wide> factorials(unsigned count) {
  std::vector<Wide> f(std::max(count, 1u) + 1);
  f[0] = 1;
  for (unsigned n = 1; n < f.size(); ++n) f[n] = f[n - 1] * n;
  return f;
}

std::vector<WComplex> polylog_neg_wide(unsigned count, const WComplex& z) {
  std::vector<WComplex> li;
  if (count == 0) return li;
  const WComplex one(1);
  const WComplex r = z / (one - z);
  const WComplex lead = z / ((one - z) * (one - z));
  li.reserve(count);
  li.push_back(r);
  std::vector<Wide> row{Wide(1)};  // binomial row n-1
  for (unsigned n = 1; n < count; ++n) {
    std::vector<Wide> next(n + 1);
    next[0] = next[n] = 1;
    for (unsigned k = 1; k < n; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
    WComplex acc(0);
    for (unsigned k = 1; k < n; ++k) acc += WComplex(row[k]) * li[k];
    li.push_back(lead + r * acc);
  }
  return li;
}

std::vector<WComplex> c_wide(unsigned count, const WComplex& z) {
  const auto li = polylog_neg_wide(count, z);
  const auto fact = factorials(count);
  std::vector<WComplex> c(count);
  for (unsigned n = 0; n < count; ++n) {
    if (n == 0) {
      c[0] = WComplex(1) / (WComplex(1) - z);
    } else {
      const Wide sign = (n % 2 == 0) ? Wide(1) : Wide(-1);
      c[n] = WComplex(sign / fact[n]) * li[n];
    }
  }
  return c;
}

std::vector<WComplex> p_wide(const std::vector<WComplex>& c, const WComplex& a) {
  const unsigned count = static_cast<unsigned>(c.size());
  std::vector<WComplex> e(count);  // (a-1)^k / k!
  if (count > 0) e[0] = WComplex(1);
  for (unsigned k = 1; k < count; ++k) e[k] = e[k - 1] * (a - WComplex(1)) / WComplex(Wide(k));
  std::vector<WComplex> p(count);
  for (unsigned n = 0; n < count; ++n) {
    WComplex acc(0);
    for (unsigned k = 0; k <= n; ++k) acc += c[n - k] * e[k];
    p[n] = acc;
  }
  return p;
}

std::vector<WideComplex> down_all(const std::vector<WComplex>& v) {
  std::vector<WideComplex> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(down(x));
  return out;
}

long double condition_of(long double largest, const WComplex& result) {
  const long double mag = magnitude(result);
  if (mag == 0.0L) return 1.0L;
  return std::max(1.0L, largest / mag);
}

// z = 1: C_0 = 1 - a, C_n = (B_{n+1} - B_{n+1}(a-1) - (n+1)(a-1)^n) / (n+1)!.
void bernoulli_branch(unsigned count, const WComplex& a, CoefficientKernelResult& out) {
  const auto fact = factorials(count + 1);
  const WComplex am1 = a - WComplex(1);
  WComplex am1_pow(1);  // (a-1)^n
  for (unsigned n = 0; n < count; ++n) {
    if (n == 0) {
      const WComplex v = WComplex(1) - a;
      out.C.push_back(down(v));
      out.condition.push_back(condition_of(std::max(1.0L, magnitude(a)), v));
      am1_pow *= am1;
      continue;
    }
    const WComplex bn(bernoulli_number(n + 1).rep().convert_to<Wide>());
    const auto poly = bernoulli_polynomial_coefficients(n + 1);
    WComplex bpoly(0);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
      bpoly = bpoly * am1 + WComplex(it->rep().convert_to<Wide>());
    }
    const WComplex last = WComplex(Wide(n + 1)) * am1_pow;
    const WComplex v = (bn - bpoly - last) / WComplex(fact[n + 1]);
    const long double largest =
        std::max({magnitude(bn), magnitude(bpoly), magnitude(last)}) /
        fact[n + 1].convert_to<long double>();
    out.C.push_back(down(v));
    out.condition.push_back(condition_of(largest, v));
    am1_pow *= am1;
  }
}

// z = 1: C_n = -(a-1)^{n+1}/(n+1)! - sum_{k<n} (-1)^{n-k} C_k / (n+1-k)!.
void recurrence_at_one(unsigned count, const WComplex& a, CoefficientKernelResult& out) {
  const auto fact = factorials(count + 1);
  const WComplex am1 = a - WComplex(1);
  std::vector<WComplex> C;
  WComplex am1_pow = am1;  // (a-1)^{n+1}
  for (unsigned n = 0; n < count; ++n) {
    WComplex v = -am1_pow / WComplex(fact[n + 1]);
    long double largest = magnitude(v);
    for (unsigned k = 0; k < n; ++k) {
      const Wide sign = ((n - k) % 2 == 0) ? Wide(1) : Wide(-1);
      const WComplex t = WComplex(sign / fact[n + 1 - k]) * C[k];
      largest = std::max(largest, magnitude(t));
      v -= t;
    }
    C.push_back(v);
    out.C.push_back(down(v));
    out.condition.push_back(condition_of(largest, v));
    am1_pow *= am1;
  }
}

// C_n(z,m) = -(1/n!) sum_{k=1}^{m-1} k^n z^{-k}, with k^n/n! built incrementally
// so no factorial or power overflows for large n.
void integer_direct(unsigned count, const WComplex& z, const WComplex& a,
                    CoefficientKernelResult& out) {
  const long m = a.real().convert_to<long>();
  std::vector<WComplex> weight;  // z^{-k}
  std::vector<Wide> q;           // k^n / n!
  WComplex zinv_pow(1);
  for (long k = 1; k < m; ++k) {
    zinv_pow /= z;
    weight.push_back(zinv_pow);
    q.push_back(Wide(1));
  }
  for (unsigned n = 0; n < count; ++n) {
    if (n > 0) {
      for (long k = 1; k < m; ++k) q[k - 1] *= Wide(k) / Wide(n);
    }
    WComplex acc(0);
    long double total = 0.0L;
    for (long k = 1; k < m; ++k) {
      const WComplex t = WComplex(q[k - 1]) * weight[k - 1];
      total += magnitude(t);
      acc += t;
    }
    const WComplex v = -acc;
    out.C.push_back(down(v));
    out.condition.push_back(condition_of(total, v));
  }
}

}  // namespace

std::vector<WideComplex> polylog_neg_kernel(unsigned count, WideComplex z) {
  return down_all(polylog_neg_wide(count, up(z)));
}

std::vector<WideComplex> c_kernel(unsigned count, WideComplex z) {
  return down_all(c_wide(count, up(z)));
}

std::vector<WideComplex> p_kernel(unsigned count, WideComplex z, WideComplex a) {
  return down_all(p_wide(c_wide(count, up(z)), up(a)));
}

CoefficientKernelResult coefficient_kernel(unsigned count, WideComplex z_in, WideComplex a_in,
                                           CoefficientPath resolved) {
  CoefficientKernelResult out;
  const WComplex z = up(z_in);
  const WComplex a = up(a_in);
  const WComplex one(1);
  const bool at_one = (z_in == WideComplex(1));

  if (resolved == CoefficientPath::integer_direct) {
    if (!at_one) {
      const auto c = c_wide(count, z);
      out.c = down_all(c);
      out.p = down_all(p_wide(c, a));
    }
    integer_direct(count, z, a, out);
    return out;
  }

  if (at_one) {
    if (resolved == CoefficientPath::recurrence) {
      recurrence_at_one(count, a, out);
    } else {
      bernoulli_branch(count, a, out);
    }
    return out;
  }

  const auto c = c_wide(count, z);
  const auto p = p_wide(c, a);
  out.c = down_all(c);
  out.p = down_all(p);
  const WComplex logz = log(z);
  const WComplex w = exp((one - a) * logz);  // z^{1-a}

  if (resolved == CoefficientPath::explicit_formula) {
    for (unsigned n = 0; n < count; ++n) {
      const WComplex wp = w * p[n];
      const WComplex v = c[n] - wp;
      out.C.push_back(down(v));
      out.condition.push_back(condition_of(std::max(magnitude(c[n]), magnitude(wp)), v));
    }
    return out;
  }

  // Recurrence for z != 1.
  const auto fact = factorials(count);
  const WComplex ratio = z / (one - z);
  const WComplex za = exp(a * logz);
  std::vector<WComplex> C;
  WComplex am1_pow(1);
  for (unsigned n = 0; n < count; ++n) {
    WComplex v;
    if (n == 0) {
      v = (one - w) / (one - z);
    } else {
      am1_pow *= a - one;
      WComplex acc(0);
      for (unsigned k = 0; k < n; ++k) {
        const Wide sign = ((n - k) % 2 == 0) ? Wide(1) : Wide(-1);
        acc += WComplex(sign / fact[n - k]) * C[k];
      }
      v = ratio * (acc - am1_pow / (WComplex(fact[n]) * za));
    }
    C.push_back(v);
    out.C.push_back(down(v));
    out.condition.push_back(
        condition_of(std::max(magnitude(c[n]), magnitude(w * p[n])), v));
  }
  return out;
}

}  // namespace detail
}  // namespace lerch
