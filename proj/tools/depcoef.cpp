// depcoef: dependence coefficient k = mu / mu_f for discrete joint distributions.
//
//   depcoef compute  <matrix.csv> [--kind ...] [--algorithm ...] [--orientation ...]
//   depcoef estimate <pairs.csv>  [...]
//   depcoef gen      --generator product -n 3 -m 4 [--lambda 0.5] [--seed 7] [-o out.csv]
//   depcoef bench    [--seed 1] [--repeats 3]

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "depcoef/run.hpp"

namespace {

using depcoef::AlgorithmChoice;
using depcoef::GeneratorKind;
using depcoef::InputKind;
using depcoef::OrientationChoice;
using depcoef::OutputFormat;

const std::map<std::string, InputKind> kKinds{
    {"matrix-probabilities", InputKind::matrix_probabilities},
    {"probabilities", InputKind::matrix_probabilities},
    {"matrix-counts", InputKind::matrix_counts},
    {"counts", InputKind::matrix_counts},
    {"sample-pairs", InputKind::sample_pairs},
    {"pairs", InputKind::sample_pairs},
};

const std::map<std::string, AlgorithmChoice> kAlgorithms{
    {"naive", AlgorithmChoice::naive},
    {"fast", AlgorithmChoice::fast},
    {"both", AlgorithmChoice::both},
};

const std::map<std::string, OrientationChoice> kOrientations{
    {"auto", OrientationChoice::automatic},
    {"as-given", OrientationChoice::as_given},
    {"both", OrientationChoice::both},
};

const std::map<std::string, OutputFormat> kOutputs{
    {"json", OutputFormat::json},
    {"plain", OutputFormat::plain},
};

const std::map<std::string, GeneratorKind> kGenerators{
    {"product", GeneratorKind::product},
    {"functional", GeneratorKind::functional},
    {"mixture", GeneratorKind::mixture},
    {"random", GeneratorKind::random},
    {"random_nonneg", GeneratorKind::random_nonneg},
};

void add_report_options(CLI::App* cmd, depcoef::RunConfig& cfg) {
  cmd->add_option("--algorithm", cfg.algorithm, "naive | fast | both")
      ->transform(CLI::CheckedTransformer(kAlgorithms));
  cmd->add_option("--orientation", cfg.orientation, "auto | as-given | both")
      ->transform(CLI::CheckedTransformer(kOrientations));
  cmd->add_option("--eps-norm", cfg.eps_norm, "Normalization tolerance on the total mass");
  cmd->add_option("--tau-indep", cfg.thresholds.tau_indep, "k at or below this is 'independent'");
  cmd->add_option("--tau-func", cfg.thresholds.tau_func, "k at or above 1 - this is 'functional'");
  cmd->add_flag("--baselines", cfg.with_baselines, "Add chi-square, Cramer's V and mutual information");
  cmd->add_option("--seed", cfg.seed, "Unused by this command");
  cmd->add_option("--output", cfg.output, "json | plain")->transform(CLI::CheckedTransformer(kOutputs));
  cmd->add_flag_callback("--parallel", [&cfg] { cfg.execution = depcoef::kernels::Execution::parallel; },
                         "Use the OpenMP kernels");
  // Test seam for the internal-error exit path; hidden from --help.
  cmd->add_option("--inject-mu-scale", cfg.inject_mu_scale)->group("");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dependence coefficient k = mu / mu_f of two discrete random variables"};
  app.require_subcommand(1);
  depcoef::RunConfig cfg;

  auto* compute = app.add_subcommand("compute", "Coefficient of a joint matrix file");
  compute->add_option("input", cfg.input_path, "Matrix or pairs file")->required()->check(CLI::ExistingFile);
  compute->add_option("--kind", cfg.input_kind, "matrix-probabilities | matrix-counts | sample-pairs")
      ->transform(CLI::CheckedTransformer(kKinds));
  add_report_options(compute, cfg);

  auto* estimate = app.add_subcommand("estimate", "Coefficient of paired categorical samples");
  estimate->add_option("input", cfg.input_path, "Pairs file")->required()->check(CLI::ExistingFile);
  add_report_options(estimate, cfg);

  auto* gen = app.add_subcommand("gen", "Write a synthetic matrix file");
  // GeneratorKind has an ADL to_string, which CLI11 would pick up for
  // defaults; bind through a string instead.
  std::string generator;
  gen->add_option("--generator", generator, "product | functional | mixture | random | random_nonneg")
      ->required()
      ->check(CLI::IsMember(kGenerators));
  gen->add_option("-n,--rows", cfg.generator.n, "Rows")->required();
  gen->add_option("-m,--cols", cfg.generator.m, "Columns")->required();
  gen->add_option("--lambda", cfg.generator.lambda, "Mixture weight of the functional part")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", cfg.seed, "Seed");
  gen->add_option("-o,--out", cfg.output_path, "Output file (default: standard output)");

  auto* bench = app.add_subcommand("bench", "Time naive vs fast kernels on fixed shapes");
  bench->add_option("--seed", cfg.seed, "Seed for the random matrices");
  bench->add_option("--repeats", cfg.bench_repeats, "Timing repetitions for the fast kernels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : depcoef::kExitInputError;
  }

  if (*compute) cfg.command = depcoef::Command::compute;
  if (*estimate) cfg.command = depcoef::Command::estimate;
  if (*gen) {
    cfg.command = depcoef::Command::gen;
    cfg.generator.kind = kGenerators.at(generator);
  }
  if (*bench) cfg.command = depcoef::Command::bench;
  return depcoef::run(cfg, std::cout, std::cerr);
}
