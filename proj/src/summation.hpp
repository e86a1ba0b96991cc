#pragma once

#include <cmath>
#include <cstddef>

namespace depcoef::detail {

// Problems with more cells than this accumulate with Kahan compensation.
inline constexpr std::size_t kCompensationThreshold = 1'000'000;

inline bool use_compensation(std::size_t rows, std::size_t cols) {
  return rows * cols > kCompensationThreshold;
}

/// Sequential accumulator; order of add() calls is the summation order.
class Summation {
 public:
  explicit Summation(bool compensated = false) : compensated_(compensated) {}

  void add(double x) {
    if (!compensated_) {
      sum_ += x;
      return;
    }
    const double y = x - carry_;
    const double t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }

  double value() const { return sum_; }

 private:
  bool compensated_;
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// Error-free transformations.

struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;
};

inline DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DoubleDouble two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DoubleDouble dd_add(DoubleDouble x, DoubleDouble y) {
  DoubleDouble s = two_sum(x.hi, y.hi);
  s.lo += x.lo + y.lo;
  return two_sum(s.hi, s.lo);
}

inline DoubleDouble dd_mul(DoubleDouble x, DoubleDouble y) {
  DoubleDouble p = two_prod(x.hi, y.hi);
  p.lo += x.hi * y.lo + x.lo * y.hi;
  return two_sum(p.hi, p.lo);
}

inline DoubleDouble dd_neg(DoubleDouble x) { return {-x.hi, -x.lo}; }

/// a*d - b*c with a relative error of a few ulps (Kahan's FMA algorithm),
/// so nearly-singular 2x2 blocks keep their true magnitude.
inline double det2(double a, double b, double c, double d) {
  const double w = b * c;
  const double e = std::fma(-b, c, w);
  const double f = std::fma(a, d, -w);
  return f + e;
}

/// Compensated dot product: result as if accumulated in twice the working
/// precision, then rounded.
inline double dot2(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  double c = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const DoubleDouble p = two_prod(x[k], y[k]);
    const DoubleDouble t = two_sum(s, p.hi);
    s = t.hi;
    c += t.lo + p.lo;
  }
  return s + c;
}

}  // namespace depcoef::detail
