#pragma once

#include <cstddef>
#include <string_view>

#include "depcoef/joint_matrix.hpp"
#include "depcoef/kernels.hpp"

namespace depcoef {

enum class Algorithm { naive, fast };
enum class Classification { independent, functional, intermediate };

std::string_view to_string(Algorithm a) noexcept;
std::string_view to_string(Classification c) noexcept;

struct Thresholds {
  double tau_indep = 1e-10;
  double tau_func = 1e-10;
};

/// Slack allowed on k > 1 before it is treated as a defect.
inline constexpr double kBoundSlack = 1e-12;

struct DependenceReport {
  double mu = 0.0;
  double mu_f = 0.0;
  double k = 0.0;
  std::size_t n_effective = 0;
  std::size_t m_effective = 0;
  bool transposed = false;
  Classification classification = Classification::intermediate;
  Algorithm algorithm = Algorithm::fast;
};

double mu_naive(const OrientedMatrix& m, kernels::Execution exec = kernels::Execution::sequential);
double mu_fast(const OrientedMatrix& m, kernels::Execution exec = kernels::Execution::sequential);
double mu_f(const OrientedMatrix& m);

/// Assembles a report from precomputed mu and mu_f. k is clamped to 1 when
/// it overshoots by at most kBoundSlack; a larger overshoot (or a negative
/// or non-finite mu) throws BoundViolation.
DependenceReport make_report(double mu, double mu_f, const OrientedMatrix& m, Algorithm algorithm,
                             const Thresholds& thresholds = {});

/// k = mu / mu_f with classification against the thresholds.
DependenceReport coefficient(const OrientedMatrix& m, Algorithm algorithm = Algorithm::fast,
                             const Thresholds& thresholds = {},
                             kernels::Execution exec = kernels::Execution::sequential);

/// True iff every row has exactly one entry above eps and those entries sit
/// in pairwise distinct columns.
bool is_functional_structure(const OrientedMatrix& m, double eps = 0.0);

}  // namespace depcoef
