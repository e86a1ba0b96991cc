#include "depcoef/generators.hpp"

#include <numeric>

#include <fmt/format.h>

namespace depcoef {

namespace {

// Stream tags keep the product and functional draws of a mixture independent.
constexpr std::uint64_t kProductStream = 0x70726f64;     // "prod"
constexpr std::uint64_t kFunctionalStream = 0x66756e63;  // "func"
constexpr std::uint64_t kRandomStream = 0x72616e64;      // "rand"

// Functional masses are drawn from [kMassFloor, 1) before renormalizing so
// that no row carries a vanishing share of the mass.
constexpr double kMassFloor = 0.1;

void require_shape(std::size_t n, std::size_t m, std::size_t min_rows) {
  if (n < min_rows || m < min_rows) {
    throw Error(Errc::ShapeError,
                fmt::format("shape {}x{} too small, need at least {}x{}", n, m, min_rows, min_rows));
  }
}

void require_oriented(std::size_t n, std::size_t m) {
  require_shape(n, m, 2);
  if (n > m) throw Error(Errc::ShapeError, fmt::format("need n <= m, got {}x{}", n, m));
}

std::vector<double> positive_weights(Rng& rng, std::size_t count, double floor) {
  std::vector<double> w(count);
  double total = 0.0;
  for (double& v : w) {
    v = floor > 0.0 ? rng.uniform(floor, 1.0) : rng.uniform_positive();
    total += v;
  }
  for (double& v : w) v /= total;
  return w;
}

}  // namespace

std::string_view to_string(GeneratorKind kind) noexcept {
  switch (kind) {
    case GeneratorKind::product: return "product";
    case GeneratorKind::functional: return "functional";
    case GeneratorKind::mixture: return "mixture";
    case GeneratorKind::random: return "random";
    case GeneratorKind::random_nonneg: return "random_nonneg";
  }
  return "random";
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : engine_(splitmix64(seed ^ splitmix64(stream))) {}

double Rng::uniform_positive() {
  return static_cast<double>((engine_() >> 11) + 1) * 0x1p-53;
}

double Rng::uniform(double lo, double hi) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1p-53;
  return lo + (hi - lo) * u;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Reject the low 2^64 mod bound values so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

JointMatrix product_matrix(std::span<const double> p, std::span<const double> q) {
  std::vector<double> out;
  out.reserve(p.size() * q.size());
  for (double a : p) {
    for (double b : q) out.push_back(a * b);
  }
  return validate(p.size(), q.size(), std::move(out), ValidationMode::probabilities, 1e-9);
}

JointMatrix functional_matrix(std::span<const double> masses, std::span<const std::size_t> columns,
                              std::size_t m) {
  if (masses.size() != columns.size()) {
    throw Error(Errc::ShapeError, "one column is needed per mass");
  }
  std::vector<bool> used(m, false);
  std::vector<double> out(masses.size() * m, 0.0);
  for (std::size_t i = 0; i < masses.size(); ++i) {
    const std::size_t c = columns[i];
    if (c >= m || used[c]) {
      throw Error(Errc::ShapeError, fmt::format("column {} is out of range or repeated", c));
    }
    used[c] = true;
    out[i * m + c] = masses[i];
  }
  return validate(masses.size(), m, std::move(out), ValidationMode::probabilities, 1e-9);
}

JointMatrix mix(const JointMatrix& a, const JointMatrix& b, double lambda) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::ShapeError, "mixture components differ in shape");
  }
  std::vector<double> out(a.entries().size());
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    out[idx] = (1.0 - lambda) * a.entries()[idx] + lambda * b.entries()[idx];
  }
  const ValidationMode mode =
      a.normalized() && b.normalized() ? ValidationMode::probabilities : ValidationMode::nonnegative;
  return validate(a.rows(), a.cols(), std::move(out), mode, 1e-9);
}

JointMatrix gen_product(std::size_t n, std::size_t m, std::uint64_t seed) {
  require_shape(n, m, 2);
  Rng rng(seed, kProductStream);
  const std::vector<double> p = positive_weights(rng, n, 0.0);
  const std::vector<double> q = positive_weights(rng, m, 0.0);
  return product_matrix(p, q);
}

JointMatrix gen_functional(std::size_t n, std::size_t m, std::uint64_t seed) {
  require_oriented(n, m);
  Rng rng(seed, kFunctionalStream);
  // Partial Fisher-Yates: the first n slots form a uniform random injection.
  std::vector<std::size_t> cols(m);
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(m - i));
    std::swap(cols[i], cols[j]);
  }
  cols.resize(n);
  const std::vector<double> masses = positive_weights(rng, n, kMassFloor);
  return functional_matrix(masses, cols, m);
}

JointMatrix gen_mixture(std::size_t n, std::size_t m, double lambda, std::uint64_t seed) {
  require_oriented(n, m);
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw Error(Errc::ShapeError, fmt::format("lambda must lie in [0, 1], got {}", lambda));
  }
  return mix(gen_product(n, m, seed), gen_functional(n, m, seed), lambda);
}

JointMatrix gen_random(std::size_t n, std::size_t m, std::uint64_t seed, bool nonneg_unnormalized) {
  require_shape(n, m, 1);
  Rng rng(seed, kRandomStream);
  std::vector<double> out(n * m);
  for (double& v : out) v = rng.uniform_positive();
  return validate(n, m, std::move(out),
                  nonneg_unnormalized ? ValidationMode::nonnegative : ValidationMode::counts);
}

JointMatrix generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::product:
      require_oriented(spec.n, spec.m);
      return gen_product(spec.n, spec.m, spec.seed);
    case GeneratorKind::functional: return gen_functional(spec.n, spec.m, spec.seed);
    case GeneratorKind::mixture: return gen_mixture(spec.n, spec.m, spec.lambda, spec.seed);
    case GeneratorKind::random: return gen_random(spec.n, spec.m, spec.seed, false);
    case GeneratorKind::random_nonneg: return gen_random(spec.n, spec.m, spec.seed, true);
  }
  throw Error(Errc::ShapeError, "unknown generator kind");
}

}  // namespace depcoef
