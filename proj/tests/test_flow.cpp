#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "pathdec/bipartite.hpp"
#include "pathdec/generate.hpp"
#include "pathdec/menger.hpp"

using namespace pathdec;

namespace {

Digraph tt4() { return generate({GeneratorKind::transitive, 4, 0, 0.5}); }

Digraph c3() {
  return Digraph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
}

bool fan_internally_disjoint(const FanResult& r) {
  for (size_t i = 0; i < r.fan.paths.size(); ++i) {
    for (size_t j = i + 1; j < r.fan.paths.size(); ++j) {
      const auto& a = r.fan.paths[i].vertices();
      const auto& b = r.fan.paths[j].vertices();
      for (size_t x = 1; x + 1 < a.size(); ++x)
        for (Vertex v : b)
          if (a[x] == v) return false;
      for (size_t x = 1; x + 1 < b.size(); ++x)
        for (Vertex v : a)
          if (b[x] == v) return false;
      if (a.back() != b.back()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("hall_k_matching on hand-checked instances") {
  BipartiteGraph both = BipartiteGraph::make(2, 1, {{0, 0}, {1, 0}});
  KMatchingResult two = hall_k_matching(both, 2);
  CHECK(two.ok);
  CHECK(two.assignment == std::vector<int>{0, 0});

  KMatchingResult one = hall_k_matching(both, 1);
  CHECK_FALSE(one.ok);
  CHECK(one.witness == std::vector<int>{0, 1});  // |X| = 2 > 1 * |N(X)| = 1

  BipartiteGraph complete32 = BipartiteGraph::make(
      3, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}});
  KMatchingResult k2 = hall_k_matching(complete32, 2);
  CHECK(k2.ok);
  std::vector<int> load(2, 0);
  for (int b : k2.assignment) {
    REQUIRE(b >= 0);
    ++load[b];
  }
  CHECK(load[0] <= 2);
  CHECK(load[1] <= 2);
}

TEST_CASE("hall witness agrees with subset enumeration") {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    SplitMix64 rng(seed);
    int a = 1 + static_cast<int>(rng.next() % 6);
    int b = 1 + static_cast<int>(rng.next() % 5);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j)
        if (rng.next_double() < 0.4) edges.emplace_back(i, j);
    BipartiteGraph g = BipartiteGraph::make(a, b, std::move(edges));
    int k = 1 + static_cast<int>(rng.next() % 3);

    KMatchingResult r = hall_k_matching(g, k);
    auto violator = oracles::hall_violator(g, k);
    CHECK(r.ok == !violator.has_value());
    if (!r.ok) {
      // The returned witness must itself violate the Hall condition.
      std::set<int> nbhd;
      auto adj = g.a_adjacency();
      for (int x : r.witness)
        for (int y : adj[x]) nbhd.insert(y);
      CHECK(static_cast<long long>(k) * nbhd.size() < r.witness.size());
    } else {
      std::vector<int> load(b, 0);
      for (int i = 0; i < a; ++i) {
        REQUIRE(r.assignment[i] >= 0);
        ++load[r.assignment[i]];
      }
      for (int j = 0; j < b; ++j) CHECK(load[j] <= k);
    }
  }
}

TEST_CASE("perfect_matching on hand-checked instances") {
  BipartiteGraph square =
      BipartiteGraph::make(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  MatchingResult m = perfect_matching(square);
  CHECK(m.perfect);
  CHECK(m.size == 2);
  CHECK(m.degree_hypothesis);

  // C6 as bipartite: parts of size 3, every degree 2 = ceil(n/2).
  BipartiteGraph c6 = BipartiteGraph::make(
      3, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 0}});
  CHECK(perfect_matching(c6).perfect);

  BipartiteGraph star = BipartiteGraph::make(3, 3, {{0, 0}, {0, 1}, {0, 2}});
  MatchingResult s = perfect_matching(star);
  CHECK_FALSE(s.perfect);
  CHECK(s.size == 1);
  CHECK(s.unmatched_a.size() == 2);
  CHECK_FALSE(s.degree_hypothesis);
}

TEST_CASE("min-degree n/2 guarantees a perfect matching (exhaustive n<=4)") {
  for (int n = 1; n <= 4; ++n) {
    const int cells = n * n;
    for (uint32_t mask = 0; mask < (1u << cells); ++mask) {
      // Quick degree filter before building anything.
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        int row = 0, col = 0;
        for (int j = 0; j < n; ++j) {
          row += (mask >> (i * n + j)) & 1;
          col += (mask >> (j * n + i)) & 1;
        }
        if (2 * row < n || 2 * col < n) ok = false;
      }
      if (!ok) continue;
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if ((mask >> (i * n + j)) & 1) edges.emplace_back(i, j);
      MatchingResult m = perfect_matching(BipartiteGraph::make(n, n, edges));
      CHECK(m.degree_hypothesis);
      CHECK(m.perfect);
    }
  }
}

TEST_CASE("bipartite text format") {
  BipartiteGraph g = BipartiteGraph::make(2, 3, {{1, 2}, {0, 0}});
  std::ostringstream out;
  g.write(out);
  CHECK(out.str() == "2 3 2\n0 0\n1 2\n");
  std::istringstream in(out.str());
  BipartiteGraph back = BipartiteGraph::read(in);
  CHECK(back.a_size == 2);
  CHECK(back.b_size == 3);
  CHECK(back.edges.size() == 2);
  CHECK_THROWS(BipartiteGraph::make(2, 2, {{0, 0}, {0, 0}}));
  CHECK_THROWS(BipartiteGraph::make(2, 2, {{2, 0}}));
}

TEST_CASE("min_vertex_separator on hand-checked instances") {
  SeparatorResult tt = min_vertex_separator(tt4(), {0}, {3});
  CHECK(tt.size == 3);  // {1, 2} plus the direct edge 0->3
  CHECK(tt.vertices == std::vector<Vertex>{1, 2});
  REQUIRE(tt.direct_edges.size() == 1);
  CHECK(tt.direct_edges[0] == Edge{0, 3});

  SeparatorResult tri = min_vertex_separator(c3(), {0}, {2});
  CHECK(tri.size == 1);
  CHECK(tri.vertices == std::vector<Vertex>{1});

  Digraph disconnected(4);
  disconnected.add_edge(2, 3);
  SeparatorResult none = min_vertex_separator(disconnected, {0}, {1});
  CHECK(none.size == 0);
  CHECK(none.vertices.empty());

  CHECK_THROWS_AS(min_vertex_separator(c3(), {}, {1}), std::invalid_argument);
}

TEST_CASE("shared A,B vertices are forced") {
  SeparatorResult shared = min_vertex_separator(c3(), {0, 1}, {1});
  CHECK(shared.size == oracles::min_separator(c3(), {0, 1}, {1}));
  bool has1 = false;
  for (Vertex v : shared.vertices) has1 |= (v == 1);
  CHECK(has1);
}

TEST_CASE("disjoint_path_fan on hand-checked instances") {
  FanResult fan = disjoint_path_fan(tt4(), {0}, 3, 3, 10);
  CHECK(fan.max_fan_size == 3);
  REQUIRE(fan.fan.paths.size() == 3);
  CHECK(fan.fan.paths[0].vertices() == std::vector<Vertex>{0, 3});
  CHECK(fan.fan.paths[1].vertices() == std::vector<Vertex>{0, 1, 3});
  CHECK(fan.fan.paths[2].vertices() == std::vector<Vertex>{0, 2, 3});
  CHECK(fan.within_cap == 3);
  CHECK(fan.complete());
  CHECK(fan_internally_disjoint(fan));

  FanResult self = disjoint_path_fan(tt4(), {1, 3}, 3, 2, 5);
  CHECK(self.target_in_sources);
  REQUIRE(self.fan.paths.size() == 1);
  CHECK(self.fan.paths[0].degenerate());
  CHECK(self.complete());

  FanResult small = disjoint_path_fan(c3(), {1}, 0, 2, 5);
  CHECK(small.max_fan_size == 1);
  REQUIRE(small.fan.paths.size() == 1);
  CHECK(small.fan.paths[0].vertices() == std::vector<Vertex>{1, 2, 0});
  CHECK_FALSE(small.complete());
}

TEST_CASE("length cap reporting") {
  // Only route from 0 to 3 is long: 0->1->2->3.
  Digraph chain = Digraph::from_edges(
      4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  FanResult fan = disjoint_path_fan(chain, {0}, 3, 1, 2);
  CHECK(fan.max_fan_size == 1);
  CHECK(fan.within_cap == 0);  // length 3 exceeds the cap 2
}

TEST_CASE("distinct-source fans never share a start") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    Digraph d = oracles::random_digraph(8, seed);
    std::vector<Vertex> a{0, 1, 2};
    FanResult fan = disjoint_path_fan(d, a, 7, 3, 10, true);
    std::set<Vertex> starts, interiors;
    for (const Path& p : fan.fan.paths) {
      CHECK(p.validate_against(d));
      CHECK(starts.insert(p.source()).second);
      const auto& vs = p.vertices();
      for (size_t i = 1; i + 1 < vs.size(); ++i)
        CHECK(interiors.insert(vs[i]).second);
    }
  }
}

TEST_CASE("duality: max fan equals brute-force min separator") {
  int checked = 0;
  for (uint64_t seed = 0; seed < 150; ++seed) {
    Digraph d = oracles::random_digraph(6, seed);
    std::vector<Vertex> a{0, 1};
    Vertex v = 5;
    FanResult fan = disjoint_path_fan(d, a, v, d.vertex_count(), d.vertex_count());
    int brute = oracles::min_separator(d, a, {v});
    CHECK(fan.max_fan_size == brute);
    SeparatorResult sep = min_vertex_separator(d, a, {v});
    CHECK(sep.size == brute);
    CHECK(fan_internally_disjoint(fan));
    ++checked;
  }
  CHECK(checked == 150);
}
