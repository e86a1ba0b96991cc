// OpenMP kernels. Per-pair quantities are computed independently and the
// final reduction stays sequential in canonical order, so the parallel
// mu_fast is bit-identical to the sequential one; the parallel mu_naive
// regroups its sum by row pair.

#include <cstdint>
#include <vector>

#include "depcoef/kernels.hpp"
#include "kernels/detail.hpp"
#include "summation.hpp"

namespace depcoef::kernels::detail {

double mu_naive_parallel(MatrixView p) {
  const std::int64_t n = static_cast<std::int64_t>(p.rows);
  const std::size_t m = p.cols;
  if (n < 2) return 0.0;
  const bool compensated = ::depcoef::detail::use_compensation(p.rows, m);
  std::vector<double> partial(p.rows * (p.rows - 1) / 2, 0.0);

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    const double* a = p.row(static_cast<std::size_t>(i)).data();
    for (std::int64_t j = i + 1; j < n; ++j) {
      const double* b = p.row(static_cast<std::size_t>(j)).data();
      ::depcoef::detail::Summation sum(compensated);
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = k + 1; l < m; ++l) {
          const double minor = ::depcoef::detail::det2(a[k], a[l], b[k], b[l]);
          sum.add(minor * minor);
        }
      }
      partial[pair_index(p.rows, static_cast<std::size_t>(i), static_cast<std::size_t>(j))] = sum.value();
    }
  }

  ::depcoef::detail::Summation total(compensated);
  for (double v : partial) total.add(v);
  return total.value();
}

std::vector<double> gram_upper_parallel(MatrixView p) {
  const std::int64_t n = static_cast<std::int64_t>(p.rows);
  std::vector<double> g(p.rows * p.rows, 0.0);

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    const double* a = p.row(static_cast<std::size_t>(i)).data();
    for (std::int64_t j = i; j < n; ++j) {
      g[static_cast<std::size_t>(i * n + j)] =
          ::depcoef::detail::dot2(a, p.row(static_cast<std::size_t>(j)).data(), p.cols);
    }
  }
  return g;
}

void pair_terms_parallel(const std::vector<double>& gram, std::size_t n, double delta,
                         std::vector<double>& terms, std::vector<unsigned char>& certified) {
  const std::int64_t rows = static_cast<std::int64_t>(n);

#pragma omp parallel for schedule(static)
  for (std::int64_t si = 0; si < rows; ++si) {
    const std::size_t i = static_cast<std::size_t>(si);
    for (std::size_t j = i + 1; j < n; ++j) {
      const PairTerm t = certified_pair_term(gram[i * n + i], gram[j * n + j], gram[i * n + j], delta);
      const std::size_t idx = pair_index(n, i, j);
      terms[idx] = t.value;
      certified[idx] = t.certified;
    }
  }
}

void exact_terms_parallel(const ExactRows& exact, std::size_t n,
                          const std::vector<std::size_t>& pending, std::vector<double>& terms) {
  // Invert the pair index once so the parallel loop runs over pending pairs only.
  std::vector<std::size_t> first(pending.size());
  std::vector<std::size_t> second(pending.size());
  {
    std::size_t idx = 0;
    std::size_t next = 0;
    for (std::size_t i = 0; i < n && next < pending.size(); ++i) {
      for (std::size_t j = i + 1; j < n && next < pending.size(); ++j, ++idx) {
        if (pending[next] != idx) continue;
        first[next] = i;
        second[next] = j;
        ++next;
      }
    }
  }

  const std::int64_t count = static_cast<std::int64_t>(pending.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t q = 0; q < count; ++q) {
    const std::size_t k = static_cast<std::size_t>(q);
    terms[pending[k]] = exact.pair_term(first[k], second[k]);
  }
}

}  // namespace depcoef::kernels::detail
