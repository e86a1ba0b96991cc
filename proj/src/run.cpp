#include "depcoef/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>

#include <fmt/format.h>

#include "depcoef/baselines.hpp"
#include "depcoef/estimation.hpp"
#include "depcoef/io.hpp"

namespace depcoef {

namespace {

struct BenchShape {
  std::size_t n;
  std::size_t m;
};

constexpr BenchShape kBenchShapes[] = {{8, 12}, {32, 64}, {64, 512}, {100, 1000}};

void check_config(const RunConfig& c) {
  if (!(c.eps_norm > 0.0) || !(c.thresholds.tau_indep > 0.0) || !(c.thresholds.tau_func > 0.0)) {
    throw Error(Errc::ShapeError, "tolerances must be positive");
  }
}

JointMatrix load(const RunConfig& c) {
  switch (c.input_kind) {
    case InputKind::matrix_probabilities:
      return read_matrix(c.input_path, ValidationMode::probabilities, c.eps_norm);
    case InputKind::matrix_counts:
      return read_matrix(c.input_path, ValidationMode::counts, c.eps_norm);
    case InputKind::sample_pairs:
      return tabulate(read_pairs(c.input_path));
  }
  throw Error(Errc::ShapeError, "unknown input kind");
}

// mu under the requested algorithm; "both" cross-checks and keeps the fast value.
double compute_mu(const OrientedMatrix& m, const RunConfig& c) {
  switch (c.algorithm) {
    case AlgorithmChoice::naive: return mu_naive(m, c.execution) * c.inject_mu_scale;
    case AlgorithmChoice::fast: return mu_fast(m, c.execution) * c.inject_mu_scale;
    case AlgorithmChoice::both: break;
  }
  const double naive = mu_naive(m, c.execution);
  const double fast = mu_fast(m, c.execution) * c.inject_mu_scale;
  if (std::abs(fast - naive) > kKernelAgreement * std::max(naive, 1e-300)) {
    throw Error(Errc::KernelMismatch,
                fmt::format("naive mu {:.17g} and fast mu {:.17g} disagree", naive, fast));
  }
  return fast;
}

Algorithm reported_algorithm(AlgorithmChoice a) {
  return a == AlgorithmChoice::naive ? Algorithm::naive : Algorithm::fast;
}

void run_compute(const RunConfig& c, std::ostream& out) {
  const JointMatrix p = load(c);
  const Orientation mode =
      c.orientation == OrientationChoice::as_given ? Orientation::as_given : Orientation::automatic;
  const OrientedMatrix oriented = orient(p, mode);

  ComputeOutput result;
  result.report = make_report(compute_mu(oriented, c), mu_f(oriented), oriented,
                              reported_algorithm(c.algorithm), c.thresholds);
  result.dropped_rows = oriented.dropped_rows;
  result.dropped_cols = oriented.dropped_cols;
  if (c.orientation == OrientationChoice::both) {
    const OrientedMatrix flipped = orient(oriented.matrix.transposed(), Orientation::as_given);
    result.k_transposed = make_report(compute_mu(flipped, c), mu_f(flipped), flipped,
                                      reported_algorithm(c.algorithm), c.thresholds)
                              .k;
  }
  if (c.with_baselines) result.baselines = baselines(oriented);

  if (c.output == OutputFormat::plain) {
    out << "k=" << format_real(result.report.k) << '\n';
  } else {
    out << to_json(result) << '\n';
  }
}

void run_gen(const RunConfig& c, std::ostream& out) {
  GeneratorSpec spec = c.generator;
  spec.seed = c.seed;
  const JointMatrix p = generate(spec);
  if (c.output_path.empty()) {
    write_matrix(out, p);
    return;
  }
  std::ofstream file(c.output_path);
  if (!file) throw Error(Errc::IoError, fmt::format("cannot write {}", c.output_path.string()));
  write_matrix(file, p);
}

template <typename F>
double best_seconds(int repeats, F&& fn) {
  double best = 0.0;
  for (int r = 0; r < std::max(repeats, 1); ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (r == 0 || elapsed.count() < best) best = elapsed.count();
  }
  return best;
}

void run_bench(const RunConfig& c, std::ostream& out) {
  out << fmt::format("{:>10} {:>14} {:>14} {:>14} {:>10}\n", "shape", "naive_s", "fast_s",
                     "fast_omp_s", "speedup");
  for (const BenchShape& shape : kBenchShapes) {
    const JointMatrix p = gen_random(shape.n, shape.m, c.seed);
    const MatrixView v = p.view();
    volatile double sink = 0.0;
    // The naive kernel is O(n^2 m^2); one timing run is enough.
    const double naive = best_seconds(1, [&] { sink = kernels::mu_naive(v); });
    const double fast = best_seconds(c.bench_repeats, [&] { sink = kernels::mu_fast(v); });
    const double fast_omp = best_seconds(
        c.bench_repeats, [&] { sink = kernels::mu_fast(v, kernels::Execution::parallel); });
    (void)sink;
    out << fmt::format("{:>10} {:>14.6f} {:>14.6f} {:>14.6f} {:>9.1f}x\n",
                       fmt::format("{}x{}", shape.n, shape.m), naive, fast, fast_omp,
                       naive / std::max(fast, 1e-9));
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    check_config(config);
    switch (config.command) {
      case Command::compute: run_compute(config, out); break;
      case Command::estimate: {
        RunConfig c = config;
        c.input_kind = InputKind::sample_pairs;
        run_compute(c, out);
        break;
      }
      case Command::gen: run_gen(config, out); break;
      case Command::bench: run_bench(config, out); break;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "depcoef: " << e.what() << '\n';
    return e.is_internal() ? kExitInternalError : kExitInputError;
  } catch (const std::exception& e) {
    err << "depcoef: internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
}

}  // namespace depcoef
