#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "lerch/checks.hpp"
#include "lerch/expansion.hpp"
#include "lerch/json_io.hpp"
#include "lerch/oracles.hpp"
#include "lerch/validation.hpp"

namespace lerch::cli {
namespace {

using Cd = std::complex<double>;

/// "re", "re+imi", "re-imi" or "imi".
Cd parse_complex(const std::string& text) {
  static const std::string num = R"((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";
  static const std::regex full("^([+-]?" + num + ")(?:([+-])(" + num + ")?i)?$");
  static const std::regex imaginary("^([+-]?)(" + num + ")?i$");
  std::smatch m;
  if (std::regex_match(text, m, full)) {
    double im = 0.0;
    if (m[2].matched) {
      im = m[3].matched ? std::stod(m[3].str()) : 1.0;
      if (m[2].str() == "-") im = -im;
    }
    return {std::stod(m[1].str()), im};
  }
  if (std::regex_match(text, m, imaginary)) {
    double im = m[2].matched ? std::stod(m[2].str()) : 1.0;
    if (m[1].str() == "-") im = -im;
    return {0.0, im};
  }
  throw UsageError("cannot parse complex literal '" + text + "' (expected re or re+imi)");
}

std::string shortest(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string digits10(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string format_complex(Cd v, std::string (*fmt)(double)) {
  if (v.imag() == 0) return fmt(v.real());
  std::string im = fmt(std::abs(v.imag()));
  return fmt(v.real()) + (std::signbit(v.imag()) ? "-" : "+") + im + "i";
}

long max_order_cap() {
  const char* env = std::getenv("LERCH_MAX_ORDER");
  if (env == nullptr || *env == '\0') return 64;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) throw UsageError("LERCH_MAX_ORDER must be a positive integer");
  return v;
}

void check_order(long order) {
  const long cap = max_order_cap();
  if (order > cap) {
    throw UsageError("order " + std::to_string(order) + " exceeds LERCH_MAX_ORDER = " +
                     std::to_string(cap));
  }
}

long as_integer(Cd v, const char* name) {
  if (!is_positive_integer(v)) {
    throw UsageError(std::string(name) + " must be a positive integer");
  }
  return static_cast<long>(v.real());
}

struct Common {
  std::string format = "human";
  std::string out_path;
};

void add_common(CLI::App* cmd, Common& c, std::vector<std::string> formats) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember(std::move(formats)))
      ->capture_default_str();
  cmd->add_option("--out", c.out_path, "Write output to this file instead of stdout");
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + c.out_path + "' for writing");
  file << text;
}

std::string value_json(Cd v) { return Json{{"value", complex_to_json(v)}}.dump() + "\n"; }

std::string value_csv(Cd v) { return "value_re,value_im\r\n" + [&] {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g\r\n", v.real(), v.imag());
  return std::string(buf);
}(); }

std::string render_value(const Common& c, Cd v) {
  if (c.format == "json") return value_json(v);
  if (c.format == "csv") return value_csv(v);
  return format_complex(v, shortest) + "\n";
}

std::string render_expansion(const Common& c, const ExpansionResult<double>& r) {
  if (c.format == "json") return to_json(r).dump() + "\n";
  if (c.format == "csv") {
    std::string s = "n,term_re,term_im\r\n";
    char buf[96];
    for (Eigen::Index n = 0; n < r.terms.size(); ++n) {
      std::snprintf(buf, sizeof buf, "%ld,%.17g,%.17g\r\n", static_cast<long>(n),
                    r.terms(n).real(), r.terms(n).imag());
      s += buf;
    }
    return s;
  }
  return format_complex(r.value, shortest) + "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluate F(z,s,a) = Phi(z,s,a) - Li_s(z) z^(-a) and eta(z,s,m) = sum z^n/n^s",
               "lerch"};
  app.require_subcommand(1);

  std::string z_text, s_text, a_text;
  long order = 0, m = 0, count = 21, max_order = 20000, samples = 91;
  double tol = 1e-14;
  std::string method, path = "auto", axis = "z", fixed_text, orders_text = "1,3,5";
  double lo = 1, hi = 10;
  Common common;

  auto* eval_f = app.add_subcommand("eval-f", "Evaluate F(z,s,a)");
  eval_f->add_option("--z", z_text, "z (re or re+imi)")->required();
  eval_f->add_option("--s", s_text, "s")->required();
  eval_f->add_option("--a", a_text, "a")->required();
  eval_f->add_option("--order", order, "Expansion order N (default: smallest-term index)");
  eval_f->add_option("--method", method, "asymptotic, convergent or quadrature")
      ->check(CLI::IsMember({"asymptotic", "convergent", "quadrature"}));
  eval_f->add_option("--path", path, "Coefficient path")
      ->check(CLI::IsMember({"auto", "explicit", "recurrence", "integer-direct"}));
  eval_f->add_option("--tol", tol, "Stop tolerance of the convergent series");
  eval_f->add_option("--max-order", max_order, "Term cap of the convergent series");
  add_common(eval_f, common, {"human", "json", "csv"});

  auto* eval_eta = app.add_subcommand("eval-eta", "Evaluate eta(z,s,m)");
  eval_eta->add_option("--z", z_text, "z")->required();
  eval_eta->add_option("--s", s_text, "s")->required();
  eval_eta->add_option("--m", m, "m >= 1")->required();
  eval_eta->add_option("--method", method, "direct, asymptotic or convergent")
      ->check(CLI::IsMember({"direct", "asymptotic", "convergent"}));
  eval_eta->add_option("--order", order, "Expansion order for the asymptotic method");
  eval_eta->add_option("--tol", tol, "Stop tolerance of the convergent method");
  eval_eta->add_option("--max-order", max_order, "Term cap of the convergent method");
  add_common(eval_eta, common, {"human", "json", "csv"});

  auto* eval_phi = app.add_subcommand("eval-phi", "Evaluate Phi(z,s,a) off the cut [1, inf)");
  eval_phi->add_option("--z", z_text, "z")->required();
  eval_phi->add_option("--s", s_text, "s")->required();
  eval_phi->add_option("--a", a_text, "a")->required();
  eval_phi->add_option("--method", method, "series (|z| < 1) or classic (large a)")
      ->check(CLI::IsMember({"series", "classic"}));
  eval_phi->add_option("--order", order, "Order of the classic expansion");
  eval_phi->add_option("--tol", tol, "Stop tolerance of the power series");
  add_common(eval_phi, common, {"human", "json", "csv"});

  auto* coeffs = app.add_subcommand("coeffs", "List C_n(z,a)");
  coeffs->add_option("--z", z_text, "z")->required();
  coeffs->add_option("--a", a_text, "a")->required();
  coeffs->add_option("--count", count, "Number of coefficients")->capture_default_str();
  coeffs->add_option("--path", path, "Coefficient path")
      ->check(CLI::IsMember({"auto", "explicit", "recurrence", "integer-direct"}));
  add_common(coeffs, common, {"human", "json"});

  auto* table1 = app.add_subcommand("table1", "Relative-error table against the printed values");
  add_common(table1, common, {"human", "json", "csv"});

  auto* sweep = app.add_subcommand("sweep", "Reference and truncated expansions along z or a");
  sweep->add_option("--axis", axis, "z or a")->check(CLI::IsMember({"z", "a"}))->capture_default_str();
  sweep->add_option("--fixed", fixed_text, "a on the z axis, z on the a axis")->required();
  sweep->add_option("--s", s_text, "s")->required();
  sweep->add_option("--lo", lo, "Start of the range")->capture_default_str();
  sweep->add_option("--hi", hi, "End of the range")->capture_default_str();
  sweep->add_option("--orders", orders_text, "Comma-separated expansion orders")->capture_default_str();
  sweep->add_option("--samples", samples, "Number of abscissae")->capture_default_str();
  add_common(sweep, common, {"csv", "json", "human"});

  auto* check = app.add_subcommand("check", "Run the property checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (eval_f->parsed()) {
      const Cd z = parse_complex(z_text), s = parse_complex(s_text), a = parse_complex(a_text);
      const std::string how = method.empty() ? "asymptotic" : method;
      if (how == "quadrature") {
        emit(common, render_value(common, F_quadrature(z, s, a)), out);
      } else if (how == "convergent") {
        const long mi = as_integer(a, "a");
        emit(common, render_expansion(common, evaluate_F_convergent(z, s, mi, tol, max_order)), out);
      } else {
        if (eval_f->count("--order") > 0 && order < 1) throw UsageError("--order must be >= 1");
        const long n = order > 0 ? order : select_truncation(z, s, a, max_order_cap());
        check_order(n);
        emit(common,
             render_expansion(common, expand_F(z, s, a, n, coefficient_path_from_string(path))),
             out);
      }
    } else if (eval_eta->parsed()) {
      const Cd z = parse_complex(z_text), s = parse_complex(s_text);
      const std::string how = method.empty() ? "direct" : method;
      EtaMethod em = eta_method::Direct{};
      if (how == "asymptotic") {
        if (eval_eta->count("--order") > 0 && order < 1) throw UsageError("--order must be >= 1");
        const long n = order > 0 ? order : max_order_cap();
        check_order(n);
        em = eta_method::Asymptotic{n};
      } else if (how == "convergent") {
        em = eta_method::Convergent{tol, max_order};
      }
      emit(common, render_value(common, evaluate_eta(z, s, m, em)), out);
    } else if (eval_phi->parsed()) {
      const Cd z = parse_complex(z_text), s = parse_complex(s_text), a = parse_complex(a_text);
      const std::string how = method.empty() ? "series" : method;
      if (how == "series") {
        emit(common, render_value(common, phi_series(z, s, a, tol)), out);
      } else {
        const long n = order > 0 ? order : 10;
        check_order(n);
        emit(common, render_expansion(common, expand_phi_classic(z, s, a, n)), out);
      }
    } else if (coeffs->parsed()) {
      const Cd z = parse_complex(z_text), a = parse_complex(a_text);
      if (count < 1) throw UsageError("--count must be >= 1");
      const auto table = CoefficientTable<double>::build(z, a, static_cast<unsigned>(count),
                                                         coefficient_path_from_string(path));
      if (common.format == "json") {
        emit(common, to_json(table).dump() + "\n", out);
      } else {
        std::ostringstream s;
        s << "path " << to_string(table.path()) << "\n";
        for (Eigen::Index n = 0; n < table.size(); ++n) {
          s << "C_" << n << " = " << format_complex(table.C()(n), digits10) << "\n";
        }
        for (const auto& d : table.diagnostics()) s << "note: " << d << "\n";
        emit(common, s.str(), out);
      }
    } else if (table1->parsed()) {
      const auto report = reproduce_table1();
      if (common.format == "csv") {
        emit(common, to_csv(report), out);
      } else if (common.format == "json") {
        emit(common, to_json(report), out);
      } else {
        std::ostringstream s;
        for (const auto& r : report.rows) {
          s << "z=" << format_complex(r.z, digits10) << " s=" << format_complex(r.s, digits10)
            << " a=" << format_complex(r.a, digits10) << " n=" << r.n
            << " rel_error=" << digits10(r.rel_error)
            << " printed=" << (r.printed_value ? digits10(*r.printed_value) : std::string("-"))
            << (r.pass ? " pass" : " FAIL") << "\n";
        }
        emit(common, s.str(), out);
      }
      if (!report.all_pass()) return kAccuracy;
    } else if (sweep->parsed()) {
      SweepAxis ax;
      ax.kind = axis == "z" ? SweepAxis::Kind::z_axis : SweepAxis::Kind::a_axis;
      ax.fixed = parse_complex(fixed_text);
      ax.s = parse_complex(s_text);
      ax.lo = lo;
      ax.hi = hi;
      std::stringstream list(orders_text);
      for (std::string item; std::getline(list, item, ',');) {
        try {
          std::size_t used = 0;
          const long v = std::stol(item, &used);
          if (used != item.size() || v < 1) throw std::invalid_argument(item);
          check_order(v);
          ax.orders.push_back(v);
        } catch (const std::logic_error&) {
          throw UsageError("bad order '" + item + "' in --orders");
        }
      }
      if (samples < 1) throw UsageError("--samples must be >= 1");
      const auto data = sweep_figure2(ax, static_cast<int>(samples));
      if (common.format == "json") {
        emit(common, to_json(data), out);
      } else if (common.format == "csv") {
        emit(common, to_csv(data), out);
      } else {
        std::ostringstream s;
        for (const auto& note : data.notes) s << "note: " << note << "\n";
        for (const auto& r : data.rows) {
          s << digits10(r.abscissa) << "  ref "
            << (r.reference ? format_complex(*r.reference, digits10) : std::string("-"));
          for (std::size_t k = 0; k < r.approximations.size(); ++k) {
            s << "  N=" << ax.orders[k] << " "
              << (r.approximations[k] ? format_complex(*r.approximations[k], digits10)
                                      : std::string("-"));
          }
          if (!r.note.empty()) s << "  (" << r.note << ")";
          s << "\n";
        }
        emit(common, s.str(), out);
      }
    } else if (check->parsed()) {
      bool ok = true;
      for (const auto& r : run_property_checks()) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        ok = ok && r.passed;
      }
      return ok ? kOk : kAccuracy;
    }
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const AccuracyError& e) {
    const auto best = e.best();
    err << "accuracy error: " << e.what() << " (best estimate "
        << format_complex(Cd(static_cast<double>(best.real()), static_cast<double>(best.imag())),
                          digits10)
        << ")\n";
    return kAccuracy;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kAccuracy;
  }
  return kOk;
}

}  // namespace lerch::cli
