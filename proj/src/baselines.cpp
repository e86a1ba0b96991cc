#include "depcoef/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "summation.hpp"

namespace depcoef {

BaselineReport baselines(const OrientedMatrix& oriented) {
  const JointMatrix& p = oriented.matrix;
  const std::size_t n = p.rows();
  const std::size_t m = p.cols();
  if (std::min(n, m) < 2) {
    throw Error(Errc::DegenerateDistribution, "association measures need at least a 2x2 table");
  }

  const double total = p.total();
  Marginals sums = marginals(p);
  for (double& s : sums.row_sums) s /= total;
  for (double& q : sums.col_sums) q /= total;

  const bool compensated = detail::use_compensation(n, m);
  detail::Summation chi(compensated);
  detail::Summation info(compensated);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double observed = p(i, j) / total;
      const double expected = sums.row_sums[i] * sums.col_sums[j];
      const double diff = observed - expected;
      chi.add(diff * diff / expected);
      if (observed > 0.0) info.add(observed * std::log(observed / expected));
    }
  }

  BaselineReport r;
  r.chi_square = chi.value();
  r.cramers_v = std::min(1.0, std::sqrt(r.chi_square / static_cast<double>(std::min(n, m) - 1)));
  // Terms of either sign can leave a tiny negative residue at independence.
  r.mutual_information = std::max(0.0, info.value());
  return r;
}

}  // namespace depcoef
