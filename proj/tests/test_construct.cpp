#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "pathdec/construct.hpp"
#include "pathdec/excess.hpp"
#include "pathdec/exact.hpp"
#include "pathdec/generate.hpp"

using namespace pathdec;

namespace {

Digraph tt4() { return generate({GeneratorKind::transitive, 4, 0, 0.5}); }

Digraph c3() {
  return Digraph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
}

Digraph two_triangles() {
  return Digraph::from_edges(
      6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
}

// Rotational orientation of K5: every vertex has in = out = 2.
Digraph eulerian_k5() { return generate({GeneratorKind::near_regular, 5, 0, 0.5}); }

bool cycles_partition_edges(const std::vector<Cycle>& cycles, const Digraph& d) {
  std::set<Edge> seen;
  long long total = 0;
  for (const Cycle& c : cycles) {
    if (!c.validate_against(d)) return false;
    for (const Edge& e : c.edges()) {
      if (!seen.insert(e).second) return false;
      ++total;
    }
  }
  return total == d.edge_count();
}

}  // namespace

TEST_CASE("acyclic decomposition of TT4") {
  PathDecomposition d = acyclic_perfect_decomposition(tt4());
  CHECK(d.kind == DecompositionKind::perfect);
  REQUIRE(d.paths.size() == 4);
  CHECK(d.paths[0].vertices() == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(classify_decomposition(tt4(), d.paths).kind ==
        DecompositionKind::perfect);
}

TEST_CASE("acyclic decomposition edge cases") {
  Digraph single = Digraph::from_edges(2, std::vector<Edge>{{0, 1}});
  PathDecomposition one = acyclic_perfect_decomposition(single);
  REQUIRE(one.paths.size() == 1);
  CHECK(one.paths[0].vertices() == std::vector<Vertex>{0, 1});

  PathDecomposition none = acyclic_perfect_decomposition(Digraph(3));
  CHECK(none.paths.empty());

  try {
    acyclic_perfect_decomposition(c3());
    FAIL("expected CyclicInputError");
  } catch (const CyclicInputError& e) {
    CHECK(e.witness().length() == 3);
  }
}

TEST_CASE("acyclic decomposition always returns ex(D) paths") {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    Digraph d = generate({GeneratorKind::acyclic_random, 10, seed, 0.5});
    PathDecomposition dec = acyclic_perfect_decomposition(d);
    CHECK(static_cast<long long>(dec.paths.size()) == total_excess(d));
    CHECK(classify_decomposition(d, dec.paths).kind ==
          DecompositionKind::perfect);
  }
}

TEST_CASE("split_eulerian on hand-checked instances") {
  auto [e1, r1] = split_eulerian(c3());
  CHECK(e1 == c3());
  CHECK(r1.edge_count() == 0);

  auto [e2, r2] = split_eulerian(tt4());
  CHECK(e2.edge_count() == 0);
  CHECK(r2 == tt4());

  Digraph d = Digraph::from_edges(
      4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {0, 3}});
  auto [e3, r3] = split_eulerian(d);
  CHECK(e3.edge_count() == 3);
  CHECK(e3.is_eulerian());
  CHECK(r3.edges() == std::vector<Edge>{{0, 3}});
}

TEST_CASE("split_eulerian partitions and classifies on random inputs") {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    Digraph d = oracles::random_oriented(8, seed);
    auto [euler, rest] = split_eulerian(d);
    CHECK(euler.is_eulerian());
    CHECK(rest.is_acyclic());
    CHECK(euler.edge_count() + rest.edge_count() == d.edge_count());
    for (const Edge& e : euler.edges()) CHECK(d.has_edge(e.from, e.to));
  }
}

TEST_CASE("cycle length bound arithmetic") {
  // C3: bound is 1 + max(9/648, 1) = 2.
  CHECK(meets_cycle_length_bound(3, 3, 3));
  CHECK(meets_cycle_length_bound(2, 3, 3));
  CHECK_FALSE(meets_cycle_length_bound(1, 3, 3));
  // Two triangles, n = 6, m = 6: bound 2.
  CHECK(meets_cycle_length_bound(3, 6, 6));
  CHECK_FALSE(meets_cycle_length_bound(1, 6, 6));
  // Eulerian K5: m = 10, bound 1 + max(100/3000, 1) = 2.
  CHECK(meets_cycle_length_bound(2, 5, 10));
  CHECK_FALSE(meets_cycle_length_bound(1, 5, 10));
  // Quadratic term dominating: n = 2, m = 2 gives 1 + max(4/192, 1) = 2.
  CHECK(meets_cycle_length_bound(2, 2, 2));
}

TEST_CASE("long_cycle on hand-checked instances") {
  LongCycleResult tri = long_cycle(c3(), LongCycleMode::exact);
  CHECK(tri.cycle.length() == 3);
  CHECK(tri.meets_bound);
  CHECK(tri.exact);

  LongCycleResult two = long_cycle(two_triangles(), LongCycleMode::exact);
  CHECK(two.cycle.length() == 3);

  LongCycleResult k5 = long_cycle(eulerian_k5(), LongCycleMode::exact);
  CHECK(k5.cycle.length() == 5);
  CHECK(k5.cycle.length() == oracles::longest_cycle(eulerian_k5()));

  CHECK_THROWS_AS(long_cycle(Digraph(3), LongCycleMode::exact),
                  std::invalid_argument);
  CHECK_THROWS_AS(long_cycle(tt4(), LongCycleMode::exact),
                  std::invalid_argument);
}

TEST_CASE("exact long cycle matches the subset-DP oracle") {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    Digraph d = oracles::random_eulerian(8, seed, 6);
    if (d.edge_count() == 0) continue;
    LongCycleResult r = long_cycle(d, LongCycleMode::exact);
    CHECK(r.cycle.length() == oracles::longest_cycle(d));
    CHECK(r.meets_bound);
  }
}

TEST_CASE("heuristic long cycle meets the bound") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    Digraph d = oracles::random_eulerian(14, seed, 12);
    if (d.edge_count() == 0) continue;
    LongCycleResult r = long_cycle(d, LongCycleMode::heuristic);
    CHECK(r.meets_bound);
    CHECK(r.cycle.validate_against(d));
  }
}

TEST_CASE("greedy cycle decomposition on hand-checked instances") {
  auto one = greedy_cycle_decomposition(c3());
  CHECK(one.size() == 1);

  auto two = greedy_cycle_decomposition(two_triangles());
  CHECK(two.size() == 2);
  CHECK(cycles_partition_edges(two, two_triangles()));

  auto k5 = greedy_cycle_decomposition(eulerian_k5());
  CHECK(k5.size() <= 3);  // 5-cycle first, Eulerian residual
  CHECK(cycles_partition_edges(k5, eulerian_k5()));

  CHECK_THROWS_AS(greedy_cycle_decomposition(tt4()), std::invalid_argument);
}

TEST_CASE("greedy cycle decomposition count bounds on random inputs") {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    Digraph d = oracles::random_eulerian(12, seed, 10);
    if (d.edge_count() == 0) continue;
    auto cycles = greedy_cycle_decomposition(d);
    CHECK(cycles_partition_edges(cycles, d));
    CHECK(3 * cycles.size() <= static_cast<size_t>(d.edge_count()));
  }
}

TEST_CASE("assign_representatives on hand-checked instances") {
  // A single triangle with multiplicity 2 everywhere: two representatives.
  RepresentativeResult tri = assign_representatives(
      {Cycle({0, 1, 2})}, 10, std::vector<int>(3, 2));
  REQUIRE(tri.ok);
  CHECK(tri.cycles[0].reps.size() == 2);

  // Two disjoint triangles with multiplicity 1: all four reps distinct.
  RepresentativeResult two = assign_representatives(
      {Cycle({0, 1, 2}), Cycle({3, 4, 5})}, 10, std::vector<int>(6, 1));
  REQUIRE(two.ok);
  std::set<Vertex> all;
  for (const auto& cwr : two.cycles) {
    CHECK(cwr.reps.size() == 2);
    for (Vertex v : cwr.reps) CHECK(all.insert(v).second);
  }

  // A 9-cycle with cap 4: at least 3 intervals, reps spaced <= 4 apart.
  std::vector<Vertex> nine(9);
  for (int i = 0; i < 9; ++i) nine[i] = i;
  RepresentativeResult ring =
      assign_representatives({Cycle(nine)}, 4, std::vector<int>(9, 3));
  REQUIRE(ring.ok);
  const auto& reps = ring.cycles[0].reps;
  CHECK(reps.size() >= 3);
  for (size_t j = 0; j < reps.size(); ++j) {
    Vertex a = reps[j], b = reps[(j + 1) % reps.size()];
    int gap = ((b - a) % 9 + 9) % 9;
    CHECK(gap <= 4);
    CHECK(gap >= 1);
  }
}

TEST_CASE("representative multiplicity caps bind") {
  // Two triangles on the same three vertices need 4 reps; caps allow 3.
  std::vector<Cycle> cycles{Cycle({0, 1, 2}), Cycle({0, 2, 1})};
  RepresentativeResult bad =
      assign_representatives(cycles, 10, std::vector<int>(3, 1));
  CHECK_FALSE(bad.ok);
  CHECK(!bad.detail.empty());

  // With caps 2 the same family fits, and no vertex exceeds its cap.
  RepresentativeResult ok =
      assign_representatives(cycles, 10, std::vector<int>(3, 2));
  REQUIRE(ok.ok);
  std::vector<int> uses(3, 0);
  for (const auto& cwr : ok.cycles) {
    CHECK(cwr.reps.size() == 2);
    for (Vertex v : cwr.reps) ++uses[v];
  }
  for (int u : uses) CHECK(u <= 2);
}

TEST_CASE("interval cap below 2 is rejected") {
  CHECK_THROWS_AS(
      assign_representatives({Cycle({0, 1, 2})}, 1, std::vector<int>(3, 2)),
      std::invalid_argument);
}
