#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "depcoef/joint_matrix.hpp"

namespace depcoef::kernels::detail {

inline constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

// A pair term is accepted from floating point only if its rigorous error
// bound is below this fraction of the term.
inline constexpr double kCertifyRelative = 1e-13;

// Outside this magnitude window the error-free transformations may
// underflow or overflow, so every pair goes through the exact path.
inline constexpr double kSafeEntryMin = 0x1p-200;
inline constexpr double kSafeEntryMax = 0x1p+200;

/// Flat index of pair (i, j), i < j, in canonical (i, j) order.
inline std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Relative error bound of a compensated dot product of length m over
/// nonnegative terms: u + gamma_m^2, floored at 2u.
inline double dot2_relative_bound(std::size_t m) {
  const double mu = static_cast<double>(m) * kUnitRoundoff;
  const double gamma = mu / (1.0 - mu);
  return std::max(2.0 * kUnitRoundoff, kUnitRoundoff + gamma * gamma);
}

struct PairTerm {
  double value;
  bool certified;
};

/// G_ii G_jj - G_ij^2 from Gram entries that each carry relative error at
/// most `delta`.
inline PairTerm certified_pair_term(double gii, double gjj, double gij, double delta) {
  const double cross = gij * gij;
  const double t = std::fma(gii, gjj, -cross);
  const double u = kUnitRoundoff;
  const double bound =
      1.01 * ((2.0 * delta + delta * delta + 3.0 * u) * (gii * gjj + cross)) + 2.0 * u * std::abs(t);
  return {t, t > 0.0 && bound <= kCertifyRelative * t};
}

/// True when every nonzero entry lies in the window where floating-point
/// certification is valid.
bool entries_in_safe_range(MatrixView p);

/// Exact integer images of the matrix rows, all sharing one power-of-two
/// scale. Read-only after construction, so pair queries may run concurrently.
class ExactRows {
 public:
  explicit ExactRows(MatrixView p);
  ~ExactRows();
  ExactRows(const ExactRows&) = delete;
  ExactRows& operator=(const ExactRows&) = delete;

  /// Exact G_ii G_jj - G_ij^2, rounded toward zero to double.
  double pair_term(std::size_t i, std::size_t j) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Sequential references.
double mu_naive_sequential(MatrixView p);
std::vector<double> gram_upper_sequential(MatrixView p);

// OpenMP variants.
double mu_naive_parallel(MatrixView p);
std::vector<double> gram_upper_parallel(MatrixView p);
void pair_terms_parallel(const std::vector<double>& gram, std::size_t n, double delta,
                         std::vector<double>& terms, std::vector<unsigned char>& certified);
void exact_terms_parallel(const ExactRows& exact, std::size_t n,
                          const std::vector<std::size_t>& pending, std::vector<double>& terms);

}  // namespace depcoef::kernels::detail
