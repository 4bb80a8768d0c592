#include <benchmark/benchmark.h>

#include "pathdec/enumerate.hpp"
#include "pathdec/exact.hpp"
#include "pathdec/excess.hpp"
#include "pathdec/generate.hpp"

using namespace pathdec;

static void BM_PathNumberNearRegular(benchmark::State& state) {
  Digraph t = generate({GeneratorKind::near_regular,
                        static_cast<int>(state.range(0)), 0, 0.5});
  for (auto _ : state) {
    ExactResult r = path_number_exact(t);
    benchmark::DoNotOptimize(r.path_number);
  }
}
BENCHMARK(BM_PathNumberNearRegular)->Arg(6)->Arg(8)->Arg(10);

static void BM_PathNumberRandom(benchmark::State& state) {
  uint64_t seed = 0;
  for (auto _ : state) {
    Digraph t = generate({GeneratorKind::random_uniform,
                          static_cast<int>(state.range(0)), seed++, 0.5});
    ExactResult r = path_number_exact(t);
    benchmark::DoNotOptimize(r.path_number);
  }
}
BENCHMARK(BM_PathNumberRandom)->Arg(8)->Arg(10);

static void BM_PathNumberTransitive(benchmark::State& state) {
  Digraph t = generate({GeneratorKind::transitive,
                        static_cast<int>(state.range(0)), 0, 0.5});
  for (auto _ : state) {
    ExactResult r = path_number_exact(t);
    benchmark::DoNotOptimize(r.path_number);
  }
}
BENCHMARK(BM_PathNumberTransitive)->Arg(10)->Arg(14);

static void BM_CanonicalCode(benchmark::State& state) {
  Digraph t = generate({GeneratorKind::random_uniform,
                        static_cast<int>(state.range(0)), 7, 0.5});
  for (auto _ : state)
    benchmark::DoNotOptimize(canonical_adjacency_code(t));
}
BENCHMARK(BM_CanonicalCode)->Arg(5)->Arg(6)->Arg(7);

static void BM_IsoEnumeration(benchmark::State& state) {
  for (auto _ : state) {
    auto all = all_tournaments(static_cast<int>(state.range(0)), true);
    benchmark::DoNotOptimize(all.size());
  }
}
BENCHMARK(BM_IsoEnumeration)->Arg(5)->Arg(6);

BENCHMARK_MAIN();
