#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "depcoef/coefficient.hpp"
#include "depcoef/generators.hpp"
#include "depcoef/joint_matrix.hpp"

namespace depcoef {

enum class Command { compute, estimate, gen, bench };
enum class InputKind { matrix_probabilities, matrix_counts, sample_pairs };
enum class AlgorithmChoice { naive, fast, both };
enum class OrientationChoice { automatic, as_given, both };
enum class OutputFormat { json, plain };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInternalError = 2;

struct RunConfig {
  Command command = Command::compute;
  std::filesystem::path input_path;
  InputKind input_kind = InputKind::matrix_probabilities;
  AlgorithmChoice algorithm = AlgorithmChoice::fast;
  OrientationChoice orientation = OrientationChoice::automatic;
  double eps_norm = kDefaultEpsNorm;
  Thresholds thresholds;
  bool with_baselines = false;
  std::uint64_t seed = 0;
  OutputFormat output = OutputFormat::json;
  kernels::Execution execution = kernels::Execution::sequential;

  // gen
  GeneratorSpec generator;
  std::filesystem::path output_path;  ///< empty: standard output

  // bench
  int bench_repeats = 3;

  // Multiplies the computed mu before the bound check. Exists only so tests
  // can drive the internal-error path; 1.0 in normal use.
  double inject_mu_scale = 1.0;
};

/// Agreement required between the two mu kernels under algorithm=both.
inline constexpr double kKernelAgreement = 1e-12;

/// Executes one command. The report goes to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 on input errors, 2 on internal errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace depcoef
