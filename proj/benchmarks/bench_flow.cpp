#include <benchmark/benchmark.h>

#include "pathdec/bipartite.hpp"
#include "pathdec/excess.hpp"
#include "pathdec/generate.hpp"
#include "pathdec/menger.hpp"

using namespace pathdec;

static void BM_DisjointPathFan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Digraph t = generate({GeneratorKind::skewed, n, 17, 0.8});
  auto [w_plus, w_minus] = threshold_sets(t, 4);
  for (auto _ : state) {
    FanResult fan = disjoint_path_fan(t, w_plus, n - 1, 4, 8);
    benchmark::DoNotOptimize(fan.max_fan_size);
  }
}
BENCHMARK(BM_DisjointPathFan)->Arg(40)->Arg(60)->Arg(100);

static void BM_MinVertexSeparator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Digraph t = generate({GeneratorKind::random_uniform, n, 23, 0.5});
  std::vector<Vertex> a{0, 1, 2};
  std::vector<Vertex> b{n - 2, n - 1};
  for (auto _ : state) {
    SeparatorResult sep = min_vertex_separator(t, a, b);
    benchmark::DoNotOptimize(sep.size);
  }
}
BENCHMARK(BM_MinVertexSeparator)->Arg(30)->Arg(60);

static void BM_HallKMatching(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 rng(5);
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n / 2; ++b)
      if (rng.next_double() < 0.3) edges.emplace_back(a, b);
  BipartiteGraph g = BipartiteGraph::make(n, n / 2, std::move(edges));
  for (auto _ : state) {
    KMatchingResult r = hall_k_matching(g, 3);
    benchmark::DoNotOptimize(r.ok);
  }
}
BENCHMARK(BM_HallKMatching)->Arg(50)->Arg(200);

static void BM_PerfectMatching(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 rng(11);
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (rng.next_double() < 0.6) edges.emplace_back(a, b);
  BipartiteGraph g = BipartiteGraph::make(n, n, std::move(edges));
  for (auto _ : state) {
    MatchingResult r = perfect_matching(g);
    benchmark::DoNotOptimize(r.size);
  }
}
BENCHMARK(BM_PerfectMatching)->Arg(50)->Arg(200);

BENCHMARK_MAIN();
