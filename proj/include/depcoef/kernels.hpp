#pragma once

// Numerical kernels for the sum of squared 2x2 minors (mu) and its
// functional-dependence bound (mu_f). Each kernel has a sequential
// reference and an OpenMP variant; the sequential path is canonical and
// bit-reproducible.
//
// The kernels accept any nonnegative matrix view. They do not require
// pruning or orientation, which the coefficient layer handles.

#include <cstddef>
#include <span>
#include <vector>

#include "depcoef/joint_matrix.hpp"

namespace depcoef::kernels {

enum class Execution { sequential, parallel };

/// Sum over all row pairs i<j and column pairs k<l of
/// (p_ik p_jl - p_il p_jk)^2, accumulated in lexicographic (i, j, k, l)
/// order. O(n^2 m^2). Each determinant is evaluated to a few ulps, so the
/// result keeps full relative accuracy even for nearly rank-1 input.
double mu_naive(MatrixView p, Execution exec = Execution::sequential);

/// Same quantity via the row Gram matrix, sum_{i<j} G_ii G_jj - G_ij^2,
/// in O(n^2 m). Every pair term is certified against a rigorous rounding
/// bound; pairs that fail (near-parallel rows) are recomputed in exact
/// integer arithmetic, so cancellation never leaks into the result.
double mu_fast(MatrixView p, Execution exec = Execution::sequential);

/// Upper triangle (j >= i) of G = P P^T, stored densely as n*n row-major
/// with the strict lower triangle zeroed. Entries use compensated dot products.
std::vector<double> gram_upper(MatrixView p, Execution exec = Execution::sequential);

/// Exact value of G_ii G_jj - G_ij^2 for one row pair, rounded to double.
double pair_term_exact(std::span<const double> a, std::span<const double> b);

/// sum_{i<j} s_i^2 s_j^2 via ((sum s^2)^2 - sum s^4) / 2, evaluated in
/// double-double arithmetic so the subtraction stays accurate when one
/// marginal dominates.
double mu_f(std::span<const double> row_sums);

/// mu_f of the row sums of `p`.
double mu_f(MatrixView p);

struct FastKernelStats {
  std::size_t pairs = 0;
  std::size_t exact_pairs = 0;  ///< pairs recomputed by the exact fallback
};

/// mu_fast that also reports how many pairs needed the exact fallback.
double mu_fast(MatrixView p, Execution exec, FastKernelStats& stats);

}  // namespace depcoef::kernels
