#include "lerch/bernoulli.hpp"

#include <mutex>

namespace lerch {
namespace {

constexpr unsigned kPrebuiltOrder = 64;

class BernoulliTable {
 public:
  BernoulliTable() { extend_locked(kPrebuiltOrder); }

  BigRational get(unsigned n) {
    std::lock_guard lock(mutex_);
    extend_locked(n);
    return values_[n];
  }

 private:
  // Defining recurrence: sum_{k=0}^{n} binom(n+1, k) B_k = 0.
  void extend_locked(unsigned n) {
    if (values_.empty()) values_.emplace_back(1);
    while (values_.size() <= n) {
      const unsigned m = static_cast<unsigned>(values_.size());
      BigRational acc;
      for (unsigned k = 0; k < m; ++k) {
        if (values_[k].is_zero()) continue;
        acc += BigRational(binomial(m + 1, k), 1) * values_[k];
      }
      values_.push_back(-acc / BigRational(static_cast<std::int64_t>(m) + 1));
    }
  }

  std::mutex mutex_;
  std::vector<BigRational> values_;
};

BernoulliTable& table() {
  static BernoulliTable t;
  return t;
}

}  // namespace

BigRational bernoulli_number(unsigned n) { return table().get(n); }

std::vector<BigRational> bernoulli_polynomial_coefficients(unsigned n) {
  std::vector<BigRational> coeffs;
  coeffs.reserve(n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    coeffs.push_back(BigRational(binomial(n, j), 1) * bernoulli_number(n - j));
  }
  return coeffs;
}

}  // namespace lerch
