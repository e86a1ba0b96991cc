#pragma once

// Text file formats and report serialization.
//
// Matrix file: one row per line, comma-separated reals, `#` comment lines.
// Pairs file:  one `x_label,y_label` observation per line, `#` comment lines.
// Blank lines are ignored in both.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "depcoef/baselines.hpp"
#include "depcoef/coefficient.hpp"
#include "depcoef/estimation.hpp"
#include "depcoef/joint_matrix.hpp"

namespace depcoef {

/// Parses matrix text and validates it with `mode`. Throws ParseError(line,
/// field), RaggedRows(line), EmptyInput, or any validate() error. Lines and
/// fields are 1-based.
JointMatrix parse_matrix(std::istream& in, ValidationMode mode, double eps_norm = kDefaultEpsNorm);
JointMatrix read_matrix(const std::filesystem::path& path, ValidationMode mode,
                        double eps_norm = kDefaultEpsNorm);

SamplePairs parse_pairs(std::istream& in);
SamplePairs read_pairs(const std::filesystem::path& path);

/// 17 significant digits, always with a decimal point or exponent.
std::string format_real(double v);

/// Writes a matrix file that parse_matrix reads back bit-exactly.
void write_matrix(std::ostream& out, const JointMatrix& p);

struct ComputeOutput {
  DependenceReport report;
  std::vector<std::size_t> dropped_rows;
  std::vector<std::size_t> dropped_cols;
  std::optional<BaselineReport> baselines;
  std::optional<double> k_transposed;
};

/// One-line JSON object with a fixed key order.
std::string to_json(const ComputeOutput& result);

}  // namespace depcoef
