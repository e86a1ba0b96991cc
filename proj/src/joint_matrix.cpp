#include "depcoef/joint_matrix.hpp"

#include <cmath>
#include <string>

#include <fmt/format.h>

#include "summation.hpp"

namespace depcoef {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::NonFiniteEntry: return "NonFiniteEntry";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::AllZero: return "AllZero";
    case Errc::ShapeError: return "ShapeError";
    case Errc::DegenerateDistribution: return "DegenerateDistribution";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::ParseError: return "ParseError";
    case Errc::RaggedRows: return "RaggedRows";
    case Errc::IoError: return "IoError";
    case Errc::BoundViolation: return "BoundViolation";
    case Errc::KernelMismatch: return "KernelMismatch";
  }
  return "Unknown";
}

namespace {

double canonical_total(std::span<const double> values, bool compensated) {
  detail::Summation sum(compensated);
  for (double v : values) sum.add(v);
  return sum.value();
}

}  // namespace

JointMatrix validate(std::size_t rows, std::size_t cols, std::vector<double> entries,
                     ValidationMode mode, double eps_norm) {
  if (rows == 0 || cols == 0) {
    throw Error(Errc::ShapeError, fmt::format("matrix must be at least 1x1, got {}x{}", rows, cols));
  }
  if (entries.size() != rows * cols) {
    throw Error(Errc::ShapeError,
                fmt::format("{} entries for a {}x{} matrix", entries.size(), rows, cols));
  }
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double v = entries[i * cols + j];
      if (!std::isfinite(v)) {
        throw Error(Errc::NonFiniteEntry, fmt::format("entry ({}, {}) is {}", i, j, v), i, j);
      }
      if (v < 0.0) {
        throw Error(Errc::NegativeEntry, fmt::format("entry ({}, {}) is {}", i, j, v), i, j);
      }
    }
  }

  const double total = canonical_total(entries, detail::use_compensation(rows, cols));
  if (!std::isfinite(total)) {
    throw Error(Errc::NonFiniteEntry, "total mass overflows");
  }
  if (total == 0.0) {
    throw Error(Errc::AllZero, "total mass is zero");
  }

  switch (mode) {
    case ValidationMode::probabilities:
      if (std::abs(total - 1.0) > eps_norm) {
        throw Error(Errc::NotNormalized,
                    fmt::format("entries sum to {:.17g}, tolerance {:g}", total, eps_norm));
      }
      return JointMatrix(rows, cols, std::move(entries), true);
    case ValidationMode::counts:
      for (double& v : entries) v /= total;
      return JointMatrix(rows, cols, std::move(entries), true);
    case ValidationMode::nonnegative:
      break;
  }
  return JointMatrix(rows, cols, std::move(entries), false);
}

JointMatrix validate(const std::vector<std::vector<double>>& grid, ValidationMode mode,
                     double eps_norm) {
  const std::size_t rows = grid.size();
  const std::size_t cols = rows == 0 ? 0 : grid.front().size();
  std::vector<double> flat;
  flat.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (grid[i].size() != cols) {
      throw Error(Errc::ShapeError,
                  fmt::format("row {} has {} entries, expected {}", i, grid[i].size(), cols), i);
    }
    flat.insert(flat.end(), grid[i].begin(), grid[i].end());
  }
  return validate(rows, cols, std::move(flat), mode, eps_norm);
}

double JointMatrix::total() const {
  return canonical_total(entries_, detail::use_compensation(rows_, cols_));
}

JointMatrix JointMatrix::transposed() const {
  std::vector<double> t(entries_.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t[j * rows_ + i] = entries_[i * cols_ + j];
  }
  return JointMatrix(cols_, rows_, std::move(t), normalized_);
}

JointMatrix JointMatrix::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw Error(Errc::ShapeError, fmt::format("scale factor must be finite and positive, got {}", factor));
  }
  std::vector<double> s(entries_);
  for (double& v : s) v *= factor;
  return JointMatrix(rows_, cols_, std::move(s), normalized_ && factor == 1.0);
}

JointMatrix JointMatrix::permuted(std::span<const std::size_t> row_order,
                                  std::span<const std::size_t> col_order) const {
  if (row_order.size() != rows_ || col_order.size() != cols_) {
    throw Error(Errc::ShapeError, "permutation length does not match the matrix shape");
  }
  std::vector<double> out;
  out.reserve(entries_.size());
  for (std::size_t i : row_order) {
    for (std::size_t j : col_order) out.push_back((*this)(i, j));
  }
  return JointMatrix(rows_, cols_, std::move(out), normalized_);
}

Marginals marginals(const JointMatrix& p) {
  const bool compensated = detail::use_compensation(p.rows(), p.cols());
  Marginals out;
  out.row_sums.reserve(p.rows());
  for (std::size_t i = 0; i < p.rows(); ++i) {
    detail::Summation s(compensated);
    for (double v : p.row(i)) s.add(v);
    out.row_sums.push_back(s.value());
  }
  out.col_sums.reserve(p.cols());
  for (std::size_t j = 0; j < p.cols(); ++j) {
    detail::Summation s(compensated);
    for (std::size_t i = 0; i < p.rows(); ++i) s.add(p(i, j));
    out.col_sums.push_back(s.value());
  }
  return out;
}

OrientedMatrix orient(const JointMatrix& p, Orientation mode) {
  // Entries are nonnegative, so a zero sum means an all-zero line.
  const Marginals sums = marginals(p);
  std::vector<std::size_t> kept_rows;
  std::vector<std::size_t> kept_cols;
  OrientedMatrix out{p, false, {}, {}};
  for (std::size_t i = 0; i < p.rows(); ++i) {
    (sums.row_sums[i] > 0.0 ? kept_rows : out.dropped_rows).push_back(i);
  }
  for (std::size_t j = 0; j < p.cols(); ++j) {
    (sums.col_sums[j] > 0.0 ? kept_cols : out.dropped_cols).push_back(j);
  }

  if (kept_rows.size() < 2 || kept_cols.size() < 2) {
    throw Error(Errc::DegenerateDistribution,
                fmt::format("{} nonzero rows and {} nonzero columns; need at least 2 of each",
                            kept_rows.size(), kept_cols.size()));
  }

  if (!out.dropped_rows.empty() || !out.dropped_cols.empty()) {
    std::vector<double> pruned;
    pruned.reserve(kept_rows.size() * kept_cols.size());
    for (std::size_t i : kept_rows) {
      for (std::size_t j : kept_cols) pruned.push_back(p(i, j));
    }
    out.matrix = p.normalized()
                     ? validate(kept_rows.size(), kept_cols.size(), std::move(pruned),
                                ValidationMode::probabilities, 1.0)
                     : validate(kept_rows.size(), kept_cols.size(), std::move(pruned),
                                ValidationMode::nonnegative);
  }

  if (mode == Orientation::automatic && out.matrix.rows() > out.matrix.cols()) {
    out.matrix = out.matrix.transposed();
    out.transposed = true;
  }
  return out;
}

}  // namespace depcoef
