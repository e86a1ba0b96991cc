#include <vector>

#include "depcoef/kernels.hpp"
#include "kernels/detail.hpp"
#include "summation.hpp"

namespace depcoef::kernels {
namespace detail {

double mu_naive_sequential(MatrixView p) {
  const std::size_t n = p.rows;
  const std::size_t m = p.cols;
  ::depcoef::detail::Summation sum(::depcoef::detail::use_compensation(n, m));
  for (std::size_t i = 0; i < n; ++i) {
    const double* a = p.row(i).data();
    for (std::size_t j = i + 1; j < n; ++j) {
      const double* b = p.row(j).data();
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = k + 1; l < m; ++l) {
          const double minor = ::depcoef::detail::det2(a[k], a[l], b[k], b[l]);
          sum.add(minor * minor);
        }
      }
    }
  }
  return sum.value();
}

std::vector<double> gram_upper_sequential(MatrixView p) {
  const std::size_t n = p.rows;
  std::vector<double> g(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double* a = p.row(i).data();
    for (std::size_t j = i; j < n; ++j) {
      g[i * n + j] = ::depcoef::detail::dot2(a, p.row(j).data(), p.cols);
    }
  }
  return g;
}

}  // namespace detail

double mu_naive(MatrixView p, Execution exec) {
  return exec == Execution::parallel ? detail::mu_naive_parallel(p) : detail::mu_naive_sequential(p);
}

std::vector<double> gram_upper(MatrixView p, Execution exec) {
  return exec == Execution::parallel ? detail::gram_upper_parallel(p)
                                     : detail::gram_upper_sequential(p);
}

double mu_fast(MatrixView p, Execution exec) {
  FastKernelStats stats;
  return mu_fast(p, exec, stats);
}

double mu_fast(MatrixView p, Execution exec, FastKernelStats& stats) {
  const std::size_t n = p.rows;
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  stats = FastKernelStats{pairs, 0};
  if (pairs == 0) return 0.0;

  std::vector<double> terms(pairs, 0.0);
  std::vector<unsigned char> certified(pairs, 0);
  if (detail::entries_in_safe_range(p)) {
    const std::vector<double> g = gram_upper(p, exec);
    const double delta = detail::dot2_relative_bound(p.cols);
    if (exec == Execution::parallel) {
      detail::pair_terms_parallel(g, n, delta, terms, certified);
    } else {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++idx) {
          const detail::PairTerm t =
              detail::certified_pair_term(g[i * n + i], g[j * n + j], g[i * n + j], delta);
          terms[idx] = t.value;
          certified[idx] = t.certified;
        }
      }
    }
  }

  std::vector<std::size_t> pending;
  for (std::size_t idx = 0; idx < pairs; ++idx) {
    if (!certified[idx]) pending.push_back(idx);
  }
  stats.exact_pairs = pending.size();
  if (!pending.empty()) {
    const detail::ExactRows exact(p);
    if (exec == Execution::parallel) {
      detail::exact_terms_parallel(exact, n, pending, terms);
    } else {
      std::size_t idx = 0;
      std::size_t next = 0;
      for (std::size_t i = 0; i < n && next < pending.size(); ++i) {
        for (std::size_t j = i + 1; j < n && next < pending.size(); ++j, ++idx) {
          if (pending[next] != idx) continue;
          terms[idx] = exact.pair_term(i, j);
          ++next;
        }
      }
    }
  }

  ::depcoef::detail::Summation sum(::depcoef::detail::use_compensation(n, p.cols));
  for (double t : terms) sum.add(t);
  return sum.value();
}

double mu_f(std::span<const double> row_sums) {
  using namespace ::depcoef::detail;
  DoubleDouble squares;
  DoubleDouble fourths;
  for (double s : row_sums) {
    const DoubleDouble s2 = two_prod(s, s);
    squares = dd_add(squares, s2);
    fourths = dd_add(fourths, dd_mul(s2, s2));
  }
  const DoubleDouble diff = dd_add(dd_mul(squares, squares), dd_neg(fourths));
  return (diff.hi + diff.lo) / 2.0;
}

double mu_f(MatrixView p) {
  std::vector<double> sums;
  sums.reserve(p.rows);
  const bool compensated = ::depcoef::detail::use_compensation(p.rows, p.cols);
  for (std::size_t i = 0; i < p.rows; ++i) {
    ::depcoef::detail::Summation s(compensated);
    for (double v : p.row(i)) s.add(v);
    sums.push_back(s.value());
  }
  return mu_f(sums);
}

}  // namespace depcoef::kernels
