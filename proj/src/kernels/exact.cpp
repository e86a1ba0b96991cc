#include <cmath>
#include <vector>

#include <gmpxx.h>

#include "depcoef/kernels.hpp"
#include "kernels/detail.hpp"

namespace depcoef::kernels {
namespace detail {

bool entries_in_safe_range(MatrixView p) {
  for (double v : p.data) {
    if (v != 0.0 && (v < kSafeEntryMin || v > kSafeEntryMax)) return false;
  }
  return true;
}

namespace {

// Every finite double is mantissa * 2^(exp - 53) with an integer mantissa.
struct SplitDouble {
  double mantissa;
  int exponent;
};

SplitDouble split(double v) {
  int e = 0;
  const double f = std::frexp(v, &e);
  return {std::ldexp(f, 53), e - 53};
}

}  // namespace

struct ExactRows::Impl {
  std::size_t rows = 0;
  std::size_t cols = 0;
  long scale = 0;  // entry (i, j) == ints[i * cols + j] * 2^scale
  std::vector<mpz_class> ints;
  std::vector<mpz_class> diag;  // exact G_ii at scale 2^(2 scale)

  mpz_class dot(std::size_t i, std::size_t j) const {
    mpz_class acc = 0;
    for (std::size_t k = 0; k < cols; ++k) {
      mpz_addmul(acc.get_mpz_t(), ints[i * cols + k].get_mpz_t(), ints[j * cols + k].get_mpz_t());
    }
    return acc;
  }
};

ExactRows::ExactRows(MatrixView p) : impl_(std::make_unique<Impl>()) {
  Impl& s = *impl_;
  s.rows = p.rows;
  s.cols = p.cols;
  bool any = false;
  int min_exp = 0;
  for (double v : p.data) {
    if (v == 0.0) continue;
    const int e = split(v).exponent;
    if (!any || e < min_exp) min_exp = e;
    any = true;
  }
  s.scale = min_exp;
  s.ints.resize(p.data.size());
  for (std::size_t idx = 0; idx < p.data.size(); ++idx) {
    const double v = p.data[idx];
    if (v == 0.0) continue;
    const SplitDouble sd = split(v);
    mpz_class z(sd.mantissa);
    mpz_mul_2exp(z.get_mpz_t(), z.get_mpz_t(), static_cast<mp_bitcnt_t>(sd.exponent - min_exp));
    s.ints[idx] = std::move(z);
  }
  s.diag.resize(s.rows);
  for (std::size_t i = 0; i < s.rows; ++i) s.diag[i] = s.dot(i, i);
}

ExactRows::~ExactRows() = default;

double ExactRows::pair_term(std::size_t i, std::size_t j) const {
  const Impl& s = *impl_;
  const mpz_class cross = s.dot(i, j);
  const mpz_class t = s.diag[i] * s.diag[j] - cross * cross;
  if (sgn(t) == 0) return 0.0;
  long e = 0;
  const double d = mpz_get_d_2exp(&e, t.get_mpz_t());
  const long total = e + 4 * s.scale;
  if (total < -1100) return 0.0;
  return std::ldexp(d, static_cast<int>(total));
}

}  // namespace detail

double pair_term_exact(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(Errc::ShapeError, "pair_term_exact needs rows of equal length");
  }
  std::vector<double> both(a.begin(), a.end());
  both.insert(both.end(), b.begin(), b.end());
  const detail::ExactRows exact(MatrixView{both, 2, a.size()});
  return exact.pair_term(0, 1);
}

}  // namespace depcoef::kernels
