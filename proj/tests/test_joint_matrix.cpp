#include <doctest.h>

#include <limits>
#include <numeric>

#include "depcoef/generators.hpp"
#include "depcoef/joint_matrix.hpp"
#include "depcoef/kernels.hpp"

using namespace depcoef;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::IoError;
}

}  // namespace

TEST_CASE("validate accepts a uniform probability matrix") {
  const JointMatrix p = validate({{0.25, 0.25}, {0.25, 0.25}});
  CHECK(p.rows() == 2);
  CHECK(p.cols() == 2);
  CHECK(p.normalized());
  CHECK(p(1, 0) == 0.25);
}

TEST_CASE("validate normalizes counts") {
  const JointMatrix p = validate({{2, 0}, {0, 2}}, ValidationMode::counts);
  CHECK(p.normalized());
  CHECK(p(0, 0) == 0.5);
  CHECK(p(0, 1) == 0.0);
  CHECK(p(1, 1) == 0.5);
}

TEST_CASE("validate error paths") {
  try {
    validate({{0.5, -0.1}, {0.3, 0.3}});
    FAIL("negative entry accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NegativeEntry);
    CHECK(e.row() == 0);
    CHECK(e.col() == 1);
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(code_of([&] { validate({{0.5, nan}, {0.25, 0.25}}); }) == Errc::NonFiniteEntry);
  CHECK(code_of([&] { validate({{0.5, inf}, {0.25, 0.25}}, ValidationMode::counts); }) == Errc::NonFiniteEntry);
  CHECK(code_of([] { validate({{0.5, 0.5}, {0.5, 0.5}}); }) == Errc::NotNormalized);
  CHECK(code_of([] { validate({{0, 0}, {0, 0}}, ValidationMode::counts); }) == Errc::AllZero);
  CHECK(code_of([] { validate({{0.5, 0.5}, {0.0}}); }) == Errc::ShapeError);
  CHECK(code_of([] { validate(0, 2, {}); }) == Errc::ShapeError);
}

TEST_CASE("eps_norm is honoured") {
  CHECK_NOTHROW(validate({{0.5, 0.5 + 1e-10}}));
  CHECK(code_of([] { validate({{0.5, 0.5 + 1e-8}}); }) == Errc::NotNormalized);
  CHECK_NOTHROW(validate({{0.5, 0.5 + 1e-8}}, ValidationMode::probabilities, 1e-7));
}

TEST_CASE("marginals") {
  SUBCASE("asymmetric") {
    const Marginals s = marginals(validate({{0.4, 0.1}, {0.2, 0.3}}));
    CHECK(s.row_sums == std::vector<double>{0.4 + 0.1, 0.2 + 0.3});
    CHECK(s.col_sums == std::vector<double>{0.4 + 0.2, 0.1 + 0.3});
    CHECK(s.row_sums[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.col_sums[0] == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(s.col_sums[1] == doctest::Approx(0.4).epsilon(1e-15));
  }
  SUBCASE("uniform") {
    const Marginals s = marginals(validate({{0.25, 0.25}, {0.25, 0.25}}));
    CHECK(s.row_sums == std::vector<double>{0.5, 0.5});
    CHECK(s.col_sums == std::vector<double>{0.5, 0.5});
  }
  SUBCASE("single row") {
    const Marginals s = marginals(validate({{0.2, 0.3, 0.5}}));
    CHECK(s.row_sums == std::vector<double>{0.2 + 0.3 + 0.5});
    CHECK(s.col_sums == std::vector<double>{0.2, 0.3, 0.5});
  }
}

TEST_CASE("marginal totals agree for generated matrices") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const JointMatrix p = gen_random(2 + seed % 7, 2 + seed % 11, seed);
    const Marginals s = marginals(p);
    const double rows = std::accumulate(s.row_sums.begin(), s.row_sums.end(), 0.0);
    const double cols = std::accumulate(s.col_sums.begin(), s.col_sums.end(), 0.0);
    CHECK(std::abs(rows - 1.0) <= kDefaultEpsNorm);
    CHECK(std::abs(cols - 1.0) <= kDefaultEpsNorm);
  }
}

TEST_CASE("orient transposes tall matrices") {
  const OrientedMatrix o = orient(validate({{0.3, 0.1}, {0.2, 0.2}, {0.1, 0.1}}));
  CHECK(o.transposed);
  CHECK(o.matrix.rows() == 2);
  CHECK(o.matrix.cols() == 3);
  CHECK(o.matrix(0, 2) == 0.1);
  CHECK(o.matrix(1, 0) == 0.1);
}

TEST_CASE("orient rejects a single nonzero row") {
  CHECK(code_of([] { orient(validate({{0.5, 0.5}, {0, 0}})); }) == Errc::DegenerateDistribution);
  CHECK(code_of([] { orient(validate({{0.5, 0}, {0.5, 0}})); }) == Errc::DegenerateDistribution);
  CHECK(code_of([] { orient(validate({{1.0}})); }) == Errc::DegenerateDistribution);
}

TEST_CASE("orient prunes zero columns") {
  const OrientedMatrix o = orient(validate({{0.2, 0, 0.3}, {0.1, 0, 0.4}}));
  CHECK_FALSE(o.transposed);
  CHECK(o.dropped_cols == std::vector<std::size_t>{1});
  CHECK(o.dropped_rows.empty());
  CHECK(o.matrix == validate({{0.2, 0.3}, {0.1, 0.4}}));
}

TEST_CASE("orient prunes zero rows before deciding orientation") {
  // 3x2 with a zero row is 2x2 after pruning: no transpose.
  const OrientedMatrix o = orient(validate({{0.3, 0.2}, {0, 0}, {0.1, 0.4}}));
  CHECK_FALSE(o.transposed);
  CHECK(o.dropped_rows == std::vector<std::size_t>{1});
  CHECK(o.matrix.rows() == 2);
}

TEST_CASE("square matrices keep their orientation; as_given never transposes") {
  const JointMatrix sq = validate({{0.1, 0.2}, {0.3, 0.4}});
  CHECK_FALSE(orient(sq).transposed);
  CHECK(orient(sq).matrix == sq);
  const JointMatrix tall = validate({{0.3, 0.1}, {0.2, 0.2}, {0.1, 0.1}});
  const OrientedMatrix o = orient(tall, Orientation::as_given);
  CHECK_FALSE(o.transposed);
  CHECK(o.matrix.rows() == 3);
}

TEST_CASE("orient is idempotent") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    JointMatrix p = gen_random(2 + seed % 9, 2 + (seed / 9) % 9, seed);
    if (seed % 3 == 0) {
      // Knock out a row and a column to exercise pruning.
      std::vector<double> e(p.entries().begin(), p.entries().end());
      for (std::size_t j = 0; j < p.cols(); ++j) e[j] = 0.0;
      for (std::size_t i = 0; i < p.rows(); ++i) e[i * p.cols() + p.cols() - 1] = 0.0;
      if (p.rows() < 3 || p.cols() < 3) continue;
      p = validate(p.rows(), p.cols(), std::move(e), ValidationMode::counts);
    }
    const OrientedMatrix once = orient(p);
    const OrientedMatrix twice = orient(once.matrix);
    CHECK_FALSE(twice.transposed);
    CHECK(twice.dropped_rows.empty());
    CHECK(twice.dropped_cols.empty());
    CHECK(twice.matrix == once.matrix);
  }
}

TEST_CASE("zero-column pruning leaves mu and mu_f unchanged") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const JointMatrix base = gen_random(2 + seed % 6, 2 + seed % 8, seed);
    // Insert a zero column after every other column.
    std::vector<double> wide;
    for (std::size_t i = 0; i < base.rows(); ++i) {
      for (std::size_t j = 0; j < base.cols(); ++j) {
        wide.push_back(base(i, j));
        if (j % 2 == 0) wide.push_back(0.0);
      }
    }
    const std::size_t wide_cols = base.cols() + (base.cols() + 1) / 2;
    const JointMatrix padded = validate(base.rows(), wide_cols, wide, ValidationMode::probabilities, 1e-9);
    const OrientedMatrix pruned = orient(padded, Orientation::as_given);
    REQUIRE(pruned.matrix == base);
    using Kernel = double (*)(MatrixView, kernels::Execution);
    for (Kernel kernel : {static_cast<Kernel>(&kernels::mu_naive), static_cast<Kernel>(&kernels::mu_fast)}) {
      const double a = kernel(padded.view(), kernels::Execution::sequential);
      const double b = kernel(pruned.matrix.view(), kernels::Execution::sequential);
      CHECK(std::abs(a - b) <= 1e-15 * b);
    }
    CHECK(std::abs(kernels::mu_f(padded.view()) - kernels::mu_f(pruned.matrix.view())) <=
          1e-15 * kernels::mu_f(pruned.matrix.view()));
  }
}
