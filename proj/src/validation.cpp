#include "lerch/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <map>
#include <sstream>
#include <tuple>

#include "lerch/expansion.hpp"
#include "lerch/json_io.hpp"
#include "lerch/oracles.hpp"

namespace lerch {
namespace {

using Wide = std::complex<long double>;

Wide widen(ComplexScalar v) { return {v.real(), v.imag()}; }
ComplexScalar narrow(Wide v) {
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

QuadratureSettings reference_settings() {
  QuadratureSettings q;
  q.abs_tol = 1e-40;
  q.rel_tol = 1e-18;
  q.max_subdivisions = 100000;
  return q;
}

Wide reference_value(Wide z, Wide s, Wide a, ReferenceMethod method) {
  if (method == ReferenceMethod::direct) {
    if (!is_positive_integer(a) || a.real() < 2) {
      throw UsageError("direct reference needs an integer a >= 2");
    }
    const auto m = static_cast<unsigned long>(a.real());
    return -eta_direct(z, s, m - 1) / ipow(z, m);
  }
  return F_quadrature(z, s, a, reference_settings());
}

Wide checked(Wide ref) {
  if (std::abs(ref) < 1e-300L) throw DegenerateReferenceError("reference |F| below 1e-300");
  return ref;
}

double rel_error_of(Wide approx, Wide ref) {
  return static_cast<double>(std::abs(Wide(1) - approx / ref));
}

std::optional<std::string> source_date() {
  const char* env = std::getenv("SOURCE_DATE_EPOCH");
  if (env == nullptr || *env == '\0') return std::nullopt;
  char* end = nullptr;
  const long long secs = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0') return std::nullopt;
  const std::time_t t = static_cast<std::time_t>(secs);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return std::string(buf);
}

struct Cell {
  double z, s;
  ComplexScalar a;
  long n;
  double printed;
};

// Printed relative errors, by sub-table, then n, then a.
const std::vector<Cell>& table1_cells() {
  static const std::vector<Cell> cells = [] {
    std::vector<Cell> out;
    struct Block {
      double z, s;
      ComplexScalar a[3];
      double v[3][3];  // [n index][a index]
    };
    const Block blocks[] = {
        {2, 1, {{5, 0}, {10, 0}, {20, 0}},
         {{7.87e-2, 2.22e-2, 6.21e-4}, {2.13e-2, 7.55e-3, 7.36e-5}, {6.69e-3, 3.68e-3, 3.24e-5}}},
        {5, 2, {{5, 0}, {10, 0}, {20, 0}},
         {{8.36e-2, 2.57e-3, 5.87e-5}, {2.82e-2, 2.89e-4, 1.21e-7}, {1.13e-2, 1.23e-4, 2.66e-9}}},
        {2, 2, {{10, 1}, {30, 1}, {50, 1}},
         {{1.60e-1, 3.67e-4, 2.41e-5}, {9.14e-2, 1.11e-5, 3.32e-8}, {5.92e-2, 3.62e-6, 4.75e-10}}},
        {5, 3, {{10, 1}, {30, 1}, {50, 1}},
         {{9.59e-3, 2.52e-5, 1.91e-6}, {2.37e-3, 1.04e-8, 5.78e-11}, {1.43e-3, 3.47e-11, 1.35e-14}}},
    };
    const long orders[] = {5, 10, 15};
    for (const auto& b : blocks) {
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) out.push_back({b.z, b.s, b.a[j], orders[i], b.v[i][j]});
      }
    }
    return out;
  }();
  return cells;
}

// RFC-4180 field quoting.
std::string csv_field(const std::string& f) {
  if (f.find_first_of(",\"\r\n") == std::string::npos) return f;
  std::string out = "\"";
  for (char c : f) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\r\n";
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(field);
      field.clear();
      any = true;
    } else if (c == '\r' || c == '\n') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      row.push_back(field);
      rows.push_back(row);
      row.clear();
      field.clear();
      any = false;
    } else {
      field += c;
      any = true;
    }
  }
  if (quoted) throw UsageError("csv: unterminated quoted field");
  if (any) {
    row.push_back(field);
    rows.push_back(row);
  }
  return rows;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& f) {
  char* end = nullptr;
  const double v = std::strtod(f.c_str(), &end);
  if (f.empty() || *end != '\0') throw UsageError("csv: bad number '" + f + "'");
  return v;
}

const char* kTolerancePolicy =
    "pass iff |rel_error - printed| <= max(0.02*printed, 1 unit in 3rd significant digit)";

const std::vector<std::string> kReportColumns = {
    "z_re", "z_im", "s_re", "s_im", "a_re", "a_im", "n", "reference_re", "reference_im",
    "approximation_re", "approximation_im", "rel_error", "printed_value", "pass"};

}  // namespace

bool ValidationReport::all_pass() const {
  return !rows.empty() &&
         std::all_of(rows.begin(), rows.end(), [](const ValidationRow& r) { return r.pass; });
}

ReferenceMethod default_reference_method(ComplexScalar a) {
  return is_positive_integer(a) && a.real() >= 2 ? ReferenceMethod::direct
                                                 : ReferenceMethod::quadrature;
}

double relative_error(ComplexScalar z, ComplexScalar s, ComplexScalar a, long n,
                      ReferenceMethod method) {
  const Wide wz = widen(z), ws = widen(s), wa = widen(a);
  const Wide ref = checked(reference_value(wz, ws, wa, method));
  return rel_error_of(expand_F(wz, ws, wa, n).value, ref);
}

bool matches_printed(double rel_error, double printed) {
  if (!(printed > 0)) return false;
  const double unit = std::pow(10.0, std::floor(std::log10(printed)) - 2);
  return std::abs(rel_error - printed) <= std::max(0.02 * printed, unit);
}

ComplexScalar table1_reference(ComplexScalar z, ComplexScalar s, ComplexScalar a) {
  return narrow(reference_value(widen(z), widen(s), widen(a), default_reference_method(a)));
}

ValidationReport reproduce_table1() {
  ValidationReport report;
  report.metadata.reference_method =
      "direct sum -z^(-a)*eta(z,s,a-1) for integer a; adaptive Gauss-Kronrod quadrature in "
      "long double (rel_tol 1e-18) otherwise";
  report.metadata.timestamp = source_date();
  report.metadata.tolerance_policy = kTolerancePolicy;

  std::map<std::tuple<double, double, double, double>, Wide> refs;
  for (const auto& cell : table1_cells()) {
    const Wide z(cell.z), s(cell.s), a = widen(cell.a);
    const auto key = std::make_tuple(cell.z, cell.s, cell.a.real(), cell.a.imag());
    auto it = refs.find(key);
    if (it == refs.end()) {
      it = refs.emplace(key, checked(reference_value(z, s, a, default_reference_method(cell.a))))
               .first;
    }
    const Wide approx = expand_F(z, s, a, cell.n).value;
    ValidationRow row;
    row.z = {cell.z, 0};
    row.s = {cell.s, 0};
    row.a = cell.a;
    row.n = cell.n;
    row.reference = narrow(it->second);
    row.approximation = narrow(approx);
    row.rel_error = rel_error_of(approx, it->second);
    row.printed_value = cell.printed;
    row.pass = matches_printed(row.rel_error, cell.printed);
    report.rows.push_back(row);
  }
  return report;
}

std::string to_csv(const ValidationReport& report) {
  std::string out = csv_line(kReportColumns);
  for (const auto& r : report.rows) {
    out += csv_line({fmt17(r.z.real()), fmt17(r.z.imag()), fmt17(r.s.real()), fmt17(r.s.imag()),
                     fmt17(r.a.real()), fmt17(r.a.imag()), std::to_string(r.n),
                     fmt17(r.reference.real()), fmt17(r.reference.imag()),
                     fmt17(r.approximation.real()), fmt17(r.approximation.imag()),
                     fmt17(r.rel_error), r.printed_value ? fmt17(*r.printed_value) : std::string(),
                     r.pass ? "true" : "false"});
  }
  return out;
}

ValidationReport report_from_csv(const std::string& text) {
  const auto table = parse_csv(text);
  if (table.empty() || table.front() != kReportColumns) throw UsageError("csv: unexpected header");
  ValidationReport report;
  for (std::size_t i = 1; i < table.size(); ++i) {
    const auto& f = table[i];
    if (f.size() != kReportColumns.size()) throw UsageError("csv: wrong field count");
    ValidationRow r;
    r.z = {parse_double(f[0]), parse_double(f[1])};
    r.s = {parse_double(f[2]), parse_double(f[3])};
    r.a = {parse_double(f[4]), parse_double(f[5])};
    r.n = std::stol(f[6]);
    r.reference = {parse_double(f[7]), parse_double(f[8])};
    r.approximation = {parse_double(f[9]), parse_double(f[10])};
    r.rel_error = parse_double(f[11]);
    if (!f[12].empty()) r.printed_value = parse_double(f[12]);
    if (f[13] != "true" && f[13] != "false") throw UsageError("csv: pass must be true/false");
    r.pass = f[13] == "true";
    report.rows.push_back(r);
  }
  return report;
}

std::string to_json(const ValidationReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"z", complex_to_json(r.z)},
                    {"s", complex_to_json(r.s)},
                    {"a", complex_to_json(r.a)},
                    {"n", r.n},
                    {"reference", complex_to_json(r.reference)},
                    {"approximation", complex_to_json(r.approximation)},
                    {"rel_error", r.rel_error},
                    {"printed_value", r.printed_value ? Json(*r.printed_value) : Json(nullptr)},
                    {"pass", r.pass}});
  }
  const auto& m = report.metadata;
  Json meta = {{"reference_method", m.reference_method},
               {"timestamp", m.timestamp ? Json(*m.timestamp) : Json(nullptr)},
               {"tolerance_policy", m.tolerance_policy}};
  return Json{{"metadata", meta}, {"rows", rows}}.dump(2) + "\n";
}

ValidationReport report_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("json: ") + e.what());
  }
  ValidationReport report;
  try {
    const auto& m = j.at("metadata");
    report.metadata.reference_method = m.at("reference_method").get<std::string>();
    if (!m.at("timestamp").is_null()) report.metadata.timestamp = m.at("timestamp").get<std::string>();
    report.metadata.tolerance_policy = m.at("tolerance_policy").get<std::string>();
    for (const auto& r : j.at("rows")) {
      ValidationRow row;
      row.z = complex_from_json(r.at("z"));
      row.s = complex_from_json(r.at("s"));
      row.a = complex_from_json(r.at("a"));
      row.n = r.at("n").get<long>();
      row.reference = complex_from_json(r.at("reference"));
      row.approximation = complex_from_json(r.at("approximation"));
      row.rel_error = r.at("rel_error").get<double>();
      if (!r.at("printed_value").is_null()) row.printed_value = r.at("printed_value").get<double>();
      row.pass = r.at("pass").get<bool>();
      report.rows.push_back(row);
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("json: ") + e.what());
  }
  return report;
}

SweepDataset sweep_figure2(const SweepAxis& axis, int samples) {
  if (samples < 1) throw UsageError("samples must be >= 1");
  if (axis.orders.empty()) throw UsageError("at least one expansion order is required");
  if (!(axis.hi >= axis.lo)) throw UsageError("sweep range needs hi >= lo");
  SweepDataset data;
  data.axis = axis;
  double lo = axis.lo;
  if (axis.kind == SweepAxis::Kind::a_axis && lo <= 1.0) {
    lo = 1.01;
    data.notes.push_back("a range clamped to start at 1.01 (expansion needs a > 1)");
    if (axis.hi < lo) throw UsageError("a range lies entirely at or below 1");
  }
  for (int i = 0; i < samples; ++i) {
    const double x = samples == 1 ? lo : lo + (axis.hi - lo) * i / (samples - 1);
    const bool on_z = axis.kind == SweepAxis::Kind::z_axis;
    const ComplexScalar z = on_z ? ComplexScalar(x, 0) : axis.fixed;
    const ComplexScalar a = on_z ? axis.fixed : ComplexScalar(x, 0);
    SweepRow row;
    row.abscissa = x;
    std::vector<std::string> notes;
    try {
      const auto method = default_reference_method(a);
      if (method == ReferenceMethod::direct) {
        const auto m = static_cast<unsigned long>(a.real());
        row.reference = -eta_direct(z, axis.s, m - 1) / ipow(z, m);
      } else {
        row.reference = F_quadrature(z, axis.s, a);
      }
    } catch (const Error& e) {
      notes.push_back(std::string("reference: ") + e.what());
    }
    for (long order : axis.orders) {
      try {
        row.approximations.push_back(
            expand_F(z, axis.s, a, order, CoefficientPath::explicit_formula).value);
      } catch (const Error& e) {
        row.approximations.push_back(std::nullopt);
        notes.push_back("order " + std::to_string(order) + ": " + e.what());
      }
    }
    for (std::size_t k = 0; k < notes.size(); ++k) row.note += (k ? "; " : "") + notes[k];
    data.rows.push_back(std::move(row));
  }
  return data;
}

std::string to_csv(const SweepDataset& data) {
  std::vector<std::string> header = {data.axis.kind == SweepAxis::Kind::z_axis ? "z" : "a",
                                     "reference_re", "reference_im"};
  for (long order : data.axis.orders) {
    header.push_back("order_" + std::to_string(order) + "_re");
    header.push_back("order_" + std::to_string(order) + "_im");
  }
  header.push_back("note");
  std::string out = csv_line(header);
  for (const auto& r : data.rows) {
    std::vector<std::string> f = {fmt17(r.abscissa)};
    auto put = [&](const std::optional<ComplexScalar>& v) {
      f.push_back(v ? fmt17(v->real()) : std::string());
      f.push_back(v ? fmt17(v->imag()) : std::string());
    };
    put(r.reference);
    for (const auto& v : r.approximations) put(v);
    f.push_back(r.note);
    out += csv_line(f);
  }
  return out;
}

std::string to_json(const SweepDataset& data) {
  auto opt = [](const std::optional<ComplexScalar>& v) {
    return v ? complex_to_json(*v) : Json(nullptr);
  };
  Json rows = Json::array();
  for (const auto& r : data.rows) {
    Json approx = Json::array();
    for (const auto& v : r.approximations) approx.push_back(opt(v));
    rows.push_back({{"abscissa", r.abscissa},
                    {"reference", opt(r.reference)},
                    {"approximations", approx},
                    {"note", r.note}});
  }
  const bool on_z = data.axis.kind == SweepAxis::Kind::z_axis;
  Json axis = {{"kind", on_z ? "z-axis" : "a-axis"},
               {on_z ? "a" : "z", complex_to_json(data.axis.fixed)},
               {"s", complex_to_json(data.axis.s)},
               {"range", {data.axis.lo, data.axis.hi}},
               {"orders", data.axis.orders}};
  return Json{{"axis", axis}, {"notes", data.notes}, {"rows", rows}}.dump(2) + "\n";
}

}  // namespace lerch
