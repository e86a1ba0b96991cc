#pragma once

// Seeded synthesis of joint matrices: rank-1 products (independence),
// injective single-entry rows (functional dependence), convex mixtures of
// the two, and i.i.d. uniform fills.
//
// Randomness: each generator stream seeds std::mt19937_64 with
// splitmix64(seed ^ stream tag), and doubles are built from the top 53 bits
// of each draw. Both are fully specified, so outputs replay bit-exactly on
// any conforming platform.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "depcoef/joint_matrix.hpp"

namespace depcoef {

enum class GeneratorKind { product, functional, mixture, random, random_nonneg };

std::string_view to_string(GeneratorKind kind) noexcept;

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::random;
  std::size_t n = 2;
  std::size_t m = 2;
  double lambda = 0.5;  ///< mixture weight of the functional component
  std::uint64_t seed = 0;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);

  /// Uniform on (0, 1].
  double uniform_positive();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);
  /// Unbiased integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Outer product p q^T. Both vectors must be nonnegative with positive sum.
JointMatrix product_matrix(std::span<const double> p, std::span<const double> q);

/// n x m matrix with masses[i] at (i, columns[i]) and zeros elsewhere.
/// Columns must be distinct and below m; masses must sum to 1.
JointMatrix functional_matrix(std::span<const double> masses, std::span<const std::size_t> columns,
                              std::size_t m);

/// Entrywise (1 - lambda) a + lambda b.
JointMatrix mix(const JointMatrix& a, const JointMatrix& b, double lambda);

JointMatrix gen_product(std::size_t n, std::size_t m, std::uint64_t seed);
JointMatrix gen_functional(std::size_t n, std::size_t m, std::uint64_t seed);
JointMatrix gen_mixture(std::size_t n, std::size_t m, double lambda, std::uint64_t seed);
JointMatrix gen_random(std::size_t n, std::size_t m, std::uint64_t seed,
                       bool nonneg_unnormalized = false);

/// Dispatches on spec.kind after checking the shape and lambda constraints.
JointMatrix generate(const GeneratorSpec& spec);

}  // namespace depcoef
