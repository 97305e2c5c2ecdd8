#pragma once

#include <json.hpp>

#include <complex>
#include <string>

#include "lerch/coefficients.hpp"
#include "lerch/expansion.hpp"

namespace lerch {

using Json = nlohmann::ordered_json;

template <typename Real>
Json complex_to_json(const std::complex<Real>& v) {
  // + 0.0 turns a negative zero into +0.
  return Json::array({static_cast<double>(v.real()) + 0.0, static_cast<double>(v.imag()) + 0.0});
}

inline ComplexScalar complex_from_json(const Json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

/// {"z":[re,im],"a":[re,im],"path":"...","C":[[re,im],...]}
template <typename Real>
Json to_json(const CoefficientTable<Real>& t) {
  Json C = Json::array();
  for (Eigen::Index n = 0; n < t.size(); ++n) C.push_back(complex_to_json(t.C()(n)));
  return {{"z", complex_to_json(t.z())},
          {"a", complex_to_json(t.a())},
          {"path", std::string(to_string(t.path()))},
          {"C", C}};
}

/// {"value":[re,im],"order":N,"remainder_estimate":r,"terms":[[re,im],...],"diagnostics":[...]}
template <typename Real>
Json to_json(const ExpansionResult<Real>& r) {
  Json terms = Json::array();
  for (Eigen::Index n = 0; n < r.terms.size(); ++n) terms.push_back(complex_to_json(r.terms(n)));
  return {{"value", complex_to_json(r.value)},
          {"order", r.order_used},
          {"remainder_estimate", static_cast<double>(r.remainder_estimate)},
          {"terms", terms},
          {"diagnostics", r.diagnostics}};
}

}  // namespace lerch
