#include "depcoef/coefficient.hpp"

#include <cmath>
#include <vector>

#include <fmt/format.h>

namespace depcoef {

std::string_view to_string(Algorithm a) noexcept {
  return a == Algorithm::naive ? "naive" : "fast";
}

std::string_view to_string(Classification c) noexcept {
  switch (c) {
    case Classification::independent: return "independent";
    case Classification::functional: return "functional";
    case Classification::intermediate: return "intermediate";
  }
  return "intermediate";
}

double mu_naive(const OrientedMatrix& m, kernels::Execution exec) {
  return kernels::mu_naive(m.matrix.view(), exec);
}

double mu_fast(const OrientedMatrix& m, kernels::Execution exec) {
  return kernels::mu_fast(m.matrix.view(), exec);
}

double mu_f(const OrientedMatrix& m) { return kernels::mu_f(marginals(m.matrix).row_sums); }

DependenceReport make_report(double mu, double mu_f, const OrientedMatrix& m, Algorithm algorithm,
                             const Thresholds& thresholds) {
  if (!std::isfinite(mu) || mu < 0.0 || !std::isfinite(mu_f) || !(mu_f > 0.0)) {
    throw Error(Errc::BoundViolation, fmt::format("invalid mu={:.17g}, mu_f={:.17g}", mu, mu_f));
  }
  double k = mu / mu_f;
  if (k > 1.0 + kBoundSlack) {
    throw Error(Errc::BoundViolation,
                fmt::format("k={:.17g} exceeds 1 (mu={:.17g}, mu_f={:.17g})", k, mu, mu_f));
  }
  if (k > 1.0) k = 1.0;

  DependenceReport r;
  r.mu = mu;
  r.mu_f = mu_f;
  r.k = k;
  r.n_effective = m.matrix.rows();
  r.m_effective = m.matrix.cols();
  r.transposed = m.transposed;
  r.algorithm = algorithm;
  if (k <= thresholds.tau_indep) {
    r.classification = Classification::independent;
  } else if (k >= 1.0 - thresholds.tau_func) {
    r.classification = Classification::functional;
  } else {
    r.classification = Classification::intermediate;
  }
  return r;
}

DependenceReport coefficient(const OrientedMatrix& m, Algorithm algorithm,
                             const Thresholds& thresholds, kernels::Execution exec) {
  const double mu = algorithm == Algorithm::naive ? mu_naive(m, exec) : mu_fast(m, exec);
  return make_report(mu, mu_f(m), m, algorithm, thresholds);
}

bool is_functional_structure(const OrientedMatrix& m, double eps) {
  const JointMatrix& p = m.matrix;
  std::vector<bool> used(p.cols(), false);
  for (std::size_t i = 0; i < p.rows(); ++i) {
    std::size_t hits = 0;
    std::size_t where = 0;
    for (std::size_t j = 0; j < p.cols(); ++j) {
      if (p(i, j) > eps) {
        ++hits;
        where = j;
      }
    }
    if (hits != 1 || used[where]) return false;
    used[where] = true;
  }
  return true;
}

}  // namespace depcoef
