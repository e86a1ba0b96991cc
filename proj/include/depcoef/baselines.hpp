#pragma once

#include "depcoef/joint_matrix.hpp"

namespace depcoef {

/// Classical association measures of the population table.
struct BaselineReport {
  double chi_square = 0.0;
  double cramers_v = 0.0;
  double mutual_information = 0.0;  ///< nats
};

/// Computed on the matrix rescaled to unit total, so unnormalized input is
/// accepted. Throws DegenerateDistribution if min(n, m) < 2.
BaselineReport baselines(const OrientedMatrix& m);

}  // namespace depcoef
