#pragma once

// Joint distribution matrices, their marginals, and the orientation rule
// (zero rows/columns pruned, at most as many rows as columns) that every
// coefficient computation runs on.

#include <cstddef>
#include <span>
#include <vector>

#include "depcoef/error.hpp"

namespace depcoef {

inline constexpr double kDefaultEpsNorm = 1e-9;

enum class ValidationMode {
  probabilities,  ///< entries must already sum to 1 within eps_norm
  counts,         ///< entries are divided by their total
  nonnegative,    ///< any nonnegative matrix, kept unnormalized
};

/// Row-major read-only view used by the numerical kernels.
struct MatrixView {
  std::span<const double> data;
  std::size_t rows = 0;
  std::size_t cols = 0;

  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  std::span<const double> row(std::size_t i) const { return data.subspan(i * cols, cols); }
};

/// A validated n x m matrix of finite nonnegative entries.
class JointMatrix {
 public:
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool normalized() const noexcept { return normalized_; }

  double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(entries_).subspan(i * cols_, cols_);
  }
  std::span<const double> entries() const noexcept { return entries_; }
  MatrixView view() const noexcept { return {entries_, rows_, cols_}; }

  /// Sum of all entries in canonical row-major order.
  double total() const;

  JointMatrix transposed() const;

  /// Multiplies every entry by `factor` (> 0). The result is unnormalized
  /// unless factor == 1.
  JointMatrix scaled(double factor) const;

  /// Reorders rows and columns: result(i, j) = this(row_order[i], col_order[j]).
  JointMatrix permuted(std::span<const std::size_t> row_order,
                       std::span<const std::size_t> col_order) const;

  bool operator==(const JointMatrix&) const = default;

 private:
  friend JointMatrix validate(std::size_t, std::size_t, std::vector<double>, ValidationMode, double);

  JointMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries, bool normalized)
      : rows_(rows), cols_(cols), entries_(std::move(entries)), normalized_(normalized) {}

  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
  bool normalized_;
};

/// Builds a JointMatrix from row-major `entries` (rows * cols values).
/// Throws Error with NegativeEntry, NonFiniteEntry, NotNormalized, AllZero
/// or ShapeError.
JointMatrix validate(std::size_t rows, std::size_t cols, std::vector<double> entries,
                     ValidationMode mode = ValidationMode::probabilities,
                     double eps_norm = kDefaultEpsNorm);

/// Nested-row convenience overload; ragged input raises ShapeError.
JointMatrix validate(const std::vector<std::vector<double>>& grid,
                     ValidationMode mode = ValidationMode::probabilities,
                     double eps_norm = kDefaultEpsNorm);

struct Marginals {
  std::vector<double> row_sums;
  std::vector<double> col_sums;
};

/// Row sums s_i and column sums q_j, each accumulated left to right in index order.
Marginals marginals(const JointMatrix& p);

enum class Orientation {
  automatic,  ///< transpose when rows > cols
  as_given,   ///< prune only
};

struct OrientedMatrix {
  JointMatrix matrix;
  bool transposed = false;
  std::vector<std::size_t> dropped_rows;  ///< indices in the input matrix
  std::vector<std::size_t> dropped_cols;
};

/// Drops zero-sum rows and columns, then transposes if more rows than
/// columns remain (automatic mode only). Square matrices keep their
/// orientation. Throws DegenerateDistribution when fewer than two nonzero
/// rows or fewer than two nonzero columns survive.
OrientedMatrix orient(const JointMatrix& p, Orientation mode = Orientation::automatic);

}  // namespace depcoef
