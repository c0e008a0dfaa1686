#include <benchmark/benchmark.h>

#include "rieszkit/rieszkit.hpp"

using namespace rieszkit;

static void BM_SeriesWeights(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const int L = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(expand_generating_function(p, 0.6, L).values().data());
  state.SetComplexityN(L);
}
BENCHMARK(BM_SeriesWeights)->ArgsProduct({{2, 6}, {1000, 10000, 100000}})->Complexity(benchmark::oN);

// Nested sums in quad precision; the alpha-independent inner sums are cached after the first call.
static void BM_ClosedFormWeights(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const int L = static_cast<int>(state.range(1));
  closed_form_coeffs(p, 0.6, L);
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_coeffs(p, 0.6, L).data());
}
BENCHMARK(BM_ClosedFormWeights)->ArgsProduct({{3, 6}, {20, 60}})->Unit(benchmark::kMillisecond);

static void BM_RieszApply(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const auto table = expand_generating_function(4, 0.5, M);
  const auto f = GridFunction::sample(UniformGrid(0.0, 1.0, M), [](double x) { return x * x * (1 - x) * (1 - x); });
  for (auto _ : state) benchmark::DoNotOptimize(riesz_apply(table, f).values.data());
}
BENCHMARK(BM_RieszApply)->Arg(80)->Arg(320)->Arg(1280);

static void BM_Assemble(benchmark::State& state) {
  const auto scheme = static_cast<Scheme>(state.range(0));
  const int M = static_cast<int>(state.range(1));
  const auto spec = builtin_problem("example3", 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(assemble(scheme, spec, M, 1e-3).lu.get());
}
BENCHMARK(BM_Assemble)->ArgsProduct({{0, 1, 2}, {32, 64, 128}});

// One factorization, N solves: the largest rung of the sixth-order ladder.
static void BM_SolveSixthOrder(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  const auto spec = builtin_problem("example3", 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(solve(Scheme::order6, spec, M, N).final_error);
}
BENCHMARK(BM_SolveSixthOrder)->Args({32, 512})->Args({64, 4096})->Unit(benchmark::kMillisecond);

static void BM_StabilityScan(benchmark::State& state) {
  const auto scheme = static_cast<Scheme>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stability_scan(scheme, 0.5, 0.01, 0.01, 1, 1, 1, 4096).max_abs_xi);
}
BENCHMARK(BM_StabilityScan)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_SymbolCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_symbol_nonnegativity(6, 0.5, 4096).min_value);
}
BENCHMARK(BM_SymbolCheck)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
