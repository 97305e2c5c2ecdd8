#pragma once

// Relative-error tables and sweep datasets for the large-a expansion of F.

#include <optional>
#include <string>
#include <vector>

#include "lerch/scalar.hpp"

namespace lerch {

enum class ReferenceMethod { direct, quadrature };

struct ValidationRow {
  ComplexScalar z;
  ComplexScalar s;
  ComplexScalar a;
  long n = 0;
  ComplexScalar reference;
  ComplexScalar approximation;
  double rel_error = 0;
  std::optional<double> printed_value;
  bool pass = false;
};

struct ValidationMetadata {
  std::string reference_method;
  std::optional<std::string> timestamp;  ///< from SOURCE_DATE_EPOCH when set
  std::string tolerance_policy;
};

struct ValidationReport {
  std::vector<ValidationRow> rows;
  ValidationMetadata metadata;

  bool all_pass() const;
};

/// |1 - approximation/reference| with the approximation from an n-term
/// expansion. Both sides are evaluated in long double.
double relative_error(ComplexScalar z, ComplexScalar s, ComplexScalar a, long n,
                      ReferenceMethod method);

/// Direct sum for integer a, quadrature otherwise.
ReferenceMethod default_reference_method(ComplexScalar a);

/// |rel_error - printed| <= max(2% of printed, one unit in its 3rd significant digit).
bool matches_printed(double rel_error, double printed);

/// All 36 cells of the relative-error table, compared with the printed values.
ValidationReport reproduce_table1();

/// Fixed reference values for the (z,s,a) triples of the table; n plays no part.
ComplexScalar table1_reference(ComplexScalar z, ComplexScalar s, ComplexScalar a);

std::string to_csv(const ValidationReport& report);
std::string to_json(const ValidationReport& report);
ValidationReport report_from_csv(const std::string& text);
ValidationReport report_from_json(const std::string& text);

struct SweepAxis {
  enum class Kind { z_axis, a_axis };
  Kind kind = Kind::z_axis;
  ComplexScalar fixed;  ///< a on the z axis, z on the a axis
  ComplexScalar s{1.0, 0.0};
  double lo = 1;
  double hi = 10;
  std::vector<long> orders;
};

struct SweepRow {
  double abscissa = 0;
  std::optional<ComplexScalar> reference;
  std::vector<std::optional<ComplexScalar>> approximations;  ///< one per order
  std::string note;
};

struct SweepDataset {
  SweepAxis axis;
  std::vector<SweepRow> rows;
  std::vector<std::string> notes;
};

/// Reference and truncated expansions at `samples` evenly spaced abscissae.
/// Failures are recorded in the row note instead of aborting.
SweepDataset sweep_figure2(const SweepAxis& axis, int samples);

std::string to_csv(const SweepDataset& data);
std::string to_json(const SweepDataset& data);

}  // namespace lerch
