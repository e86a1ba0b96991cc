#include "depcoef/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include <fmt/format.h>

namespace depcoef {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool is_skippable(std::string_view line) { return line.empty() || line.front() == '#'; }

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, fmt::format("cannot open {}", path.string()));
  return in;
}

void append_indices(std::string& out, const std::vector<std::size_t>& values) {
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  out += ']';
}

}  // namespace

JointMatrix parse_matrix(std::istream& in, ValidationMode mode, double eps_norm) {
  std::vector<double> entries;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::string raw;
  for (std::size_t line_no = 1; std::getline(in, raw); ++line_no) {
    const std::string_view line = trim(raw);
    if (is_skippable(line)) continue;
    const std::vector<std::string_view> fields = split_fields(line);
    if (rows == 0) {
      cols = fields.size();
    } else if (fields.size() != cols) {
      throw Error(Errc::RaggedRows,
                  fmt::format("line {} has {} fields, expected {}", line_no, fields.size(), cols),
                  line_no);
    }
    for (std::size_t f = 0; f < fields.size(); ++f) {
      const std::string_view field = fields[f];
      double value = 0.0;
      const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc() || end != field.data() + field.size()) {
        throw Error(Errc::ParseError,
                    fmt::format("line {}, field {}: '{}' is not a number", line_no, f + 1, field),
                    line_no, f + 1);
      }
      entries.push_back(value);
    }
    ++rows;
  }
  if (rows == 0) throw Error(Errc::EmptyInput, "no matrix rows");
  return validate(rows, cols, std::move(entries), mode, eps_norm);
}

JointMatrix read_matrix(const std::filesystem::path& path, ValidationMode mode, double eps_norm) {
  std::ifstream in = open_input(path);
  return parse_matrix(in, mode, eps_norm);
}

SamplePairs parse_pairs(std::istream& in) {
  SamplePairs samples;
  std::string raw;
  for (std::size_t line_no = 1; std::getline(in, raw); ++line_no) {
    const std::string_view line = trim(raw);
    if (is_skippable(line)) continue;
    const std::vector<std::string_view> fields = split_fields(line);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw Error(Errc::ParseError,
                  fmt::format("line {}: expected 'x_label,y_label'", line_no), line_no);
    }
    samples.add(std::string(fields[0]), std::string(fields[1]));
  }
  if (samples.empty()) throw Error(Errc::EmptyInput, "no sample pairs");
  return samples;
}

SamplePairs read_pairs(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return parse_pairs(in);
}

std::string format_real(double v) {
  std::string s = fmt::format("{:.17g}", v);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

void write_matrix(std::ostream& out, const JointMatrix& p) {
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (std::size_t j = 0; j < p.cols(); ++j) {
      if (j > 0) out << ',';
      out << format_real(p(i, j));
    }
    out << '\n';
  }
}

std::string to_json(const ComputeOutput& result) {
  const DependenceReport& r = result.report;
  std::string out = "{";
  out += fmt::format("\"n\":{},\"m\":{},\"transposed\":{},", r.n_effective, r.m_effective,
                     r.transposed ? "true" : "false");
  out += "\"dropped_rows\":";
  append_indices(out, result.dropped_rows);
  out += ",\"dropped_cols\":";
  append_indices(out, result.dropped_cols);
  out += fmt::format(",\"mu\":{},\"mu_f\":{},\"k\":{},\"classification\":\"{}\",\"algorithm\":\"{}\"",
                     format_real(r.mu), format_real(r.mu_f), format_real(r.k),
                     to_string(r.classification), to_string(r.algorithm));
  if (result.baselines) {
    const BaselineReport& b = *result.baselines;
    out += fmt::format(
        ",\"baselines\":{{\"chi_square\":{},\"cramers_v\":{},\"mutual_information_nats\":{}}}",
        format_real(b.chi_square), format_real(b.cramers_v), format_real(b.mutual_information));
  }
  if (result.k_transposed) out += fmt::format(",\"k_transposed\":{}", format_real(*result.k_transposed));
  out += '}';
  return out;
}

}  // namespace depcoef
