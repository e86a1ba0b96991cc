// Serial reference vs OpenMP kernels for mu on random matrices.
//
//   ./bench_kernels --benchmark_filter=Fast

#include <benchmark/benchmark.h>

#include "depcoef/generators.hpp"
#include "depcoef/kernels.hpp"

namespace {

using depcoef::kernels::Execution;

template <Execution Exec>
void BM_MuNaive(benchmark::State& state) {
  const auto p = depcoef::gen_random(state.range(0), state.range(1), 1);
  for (auto _ : state) benchmark::DoNotOptimize(depcoef::kernels::mu_naive(p.view(), Exec));
  state.SetComplexityN(state.range(0) * state.range(0) * state.range(1) * state.range(1));
}

template <Execution Exec>
void BM_MuFast(benchmark::State& state) {
  const auto p = depcoef::gen_random(state.range(0), state.range(1), 1);
  for (auto _ : state) benchmark::DoNotOptimize(depcoef::kernels::mu_fast(p.view(), Exec));
  state.SetComplexityN(state.range(0) * state.range(0) * state.range(1));
}

// Product matrices send every pair through the exact fallback.
void BM_MuFastRankOne(benchmark::State& state) {
  const auto p = depcoef::gen_product(state.range(0), state.range(1), 1);
  for (auto _ : state) benchmark::DoNotOptimize(depcoef::kernels::mu_fast(p.view()));
}

void Shapes(benchmark::internal::Benchmark* b) {
  b->Args({8, 12})->Args({32, 64})->Args({64, 512})->Args({100, 1000});
}

}  // namespace

BENCHMARK(BM_MuNaive<Execution::sequential>)->Args({8, 12})->Args({32, 64})->Args({64, 512})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MuNaive<Execution::parallel>)->Args({8, 12})->Args({32, 64})->Args({64, 512})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MuFast<Execution::sequential>)->Apply(Shapes)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MuFast<Execution::parallel>)->Apply(Shapes)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MuFastRankOne)->Apply(Shapes)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
