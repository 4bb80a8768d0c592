#include <benchmark/benchmark.h>

#include "pathdec/absorb.hpp"
#include "pathdec/construct.hpp"
#include "pathdec/generate.hpp"

using namespace pathdec;

static void BM_AcyclicDecomposition(benchmark::State& state) {
  Digraph d = generate({GeneratorKind::acyclic_random,
                        static_cast<int>(state.range(0)), 3, 0.5});
  for (auto _ : state) {
    PathDecomposition dec = acyclic_perfect_decomposition(d);
    benchmark::DoNotOptimize(dec.paths.size());
  }
}
BENCHMARK(BM_AcyclicDecomposition)->Arg(20)->Arg(60)->Arg(120);

static void BM_SplitEulerian(benchmark::State& state) {
  Digraph t = generate({GeneratorKind::skewed,
                        static_cast<int>(state.range(0)), 29, 0.8});
  for (auto _ : state) {
    auto [euler, rest] = split_eulerian(t);
    benchmark::DoNotOptimize(euler.edge_count());
  }
}
BENCHMARK(BM_SplitEulerian)->Arg(40)->Arg(80);

static void BM_GreedyCycleDecomposition(benchmark::State& state) {
  Digraph t = generate({GeneratorKind::skewed,
                        static_cast<int>(state.range(0)), 29, 0.85});
  auto [euler, rest] = split_eulerian(t);
  for (auto _ : state) {
    auto cycles = greedy_cycle_decomposition(euler);
    benchmark::DoNotOptimize(cycles.size());
  }
}
BENCHMARK(BM_GreedyCycleDecomposition)->Arg(30)->Arg(50);

static void BM_AbsorbPipeline(benchmark::State& state) {
  Digraph t = generate({GeneratorKind::skewed,
                        static_cast<int>(state.range(0)), 3, 0.97});
  AbsorptionParams params = AbsorptionParams::suggest(t);
  for (auto _ : state) {
    AbsorbResult r = absorb_and_decompose(t, params);
    benchmark::DoNotOptimize(r.ok);
  }
}
BENCHMARK(BM_AbsorbPipeline)->Arg(40)->Arg(60);

BENCHMARK_MAIN();
