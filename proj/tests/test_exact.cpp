#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "oracles.hpp"
#include "pathdec/conjecture.hpp"
#include "pathdec/enumerate.hpp"
#include "pathdec/exact.hpp"
#include "pathdec/excess.hpp"
#include "pathdec/generate.hpp"

using namespace pathdec;

namespace {

Digraph tt4() { return generate({GeneratorKind::transitive, 4, 0, 0.5}); }

Digraph c3() {
  return Digraph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
}

Digraph near_regular_t4() {
  return Digraph::from_edges(
      4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}});
}

}  // namespace

TEST_CASE("path number on small reference instances, against the oracle") {
  CHECK(oracles::path_number(c3()) == 2);
  ExactResult tri = path_number_exact(c3());
  CHECK(tri.path_number == 2);
  CHECK(tri.exact);
  CHECK(tri.witness.kind == DecompositionKind::general);  // ex(C3) = 0 < 2

  CHECK(oracles::path_number(tt4()) == 4);
  ExactResult t = path_number_exact(tt4());
  CHECK(t.path_number == 4);
  CHECK(t.witness.kind == DecompositionKind::perfect);

  CHECK(oracles::path_number(near_regular_t4()) == 2);
  ExactResult nr = path_number_exact(near_regular_t4());
  CHECK(nr.path_number == 2);  // two Hamilton paths
  CHECK(nr.witness.kind == DecompositionKind::perfect);
  for (const Path& p : nr.witness.paths) CHECK(p.length() == 3);
}

TEST_CASE("empty digraph has path number zero") {
  ExactResult r = path_number_exact(Digraph(5));
  CHECK(r.path_number == 0);
  CHECK(r.witness.paths.empty());
}

TEST_CASE("solver agrees with the oracle on random small digraphs") {
  for (uint64_t seed = 0; seed < 80; ++seed) {
    Digraph d = oracles::random_oriented(5, seed);
    if (d.edge_count() > 9) continue;  // keep the oracle affordable
    ExactResult r = path_number_exact(d);
    CHECK(r.exact);
    CHECK(r.path_number == oracles::path_number(d));
    CHECK(r.path_number >= total_excess(d));
  }
}

TEST_CASE("budget exhaustion reports an upper bound honestly") {
  Digraph hard = generate({GeneratorKind::near_regular, 9, 0, 0.5});
  ExactResult r = path_number_exact(hard, SolveBudget{5});
  CHECK_FALSE(r.exact);
  CHECK(r.path_number >= total_excess(hard));
  Classification c = classify_decomposition(hard, r.witness.paths);
  CHECK(c.edges_covered == hard.edge_count());  // still a real decomposition
}

TEST_CASE("quarter bound check") {
  QuarterBoundCheck t = pn_upper_quarter_check(tt4());
  CHECK(t.holds);
  CHECK(t.pn_or_bound == 4);  // tight: 4 <= 16/4

  QuarterBoundCheck tri = pn_upper_quarter_check(c3());
  CHECK(tri.holds);  // 2 <= 9/4
  CHECK(tri.pn_or_bound == 2);

  Digraph t5 = generate({GeneratorKind::near_regular, 5, 0, 0.5});
  CHECK(pn_upper_quarter_check(t5).holds);
  CHECK_THROWS_AS(pn_upper_quarter_check(Digraph(3)), std::invalid_argument);
}

TEST_CASE("labeled and iso enumeration counts") {
  CHECK(all_tournaments(1, true).size() == 1);
  CHECK(all_tournaments(2, true).size() == 1);
  CHECK(all_tournaments(3, true).size() == 2);
  CHECK(all_tournaments(4, true).size() == 4);
  CHECK(all_tournaments(5, true).size() == 12);
  CHECK(all_tournaments(6, true).size() == 56);
  CHECK(all_tournaments(3, false).size() == 8);
  CHECK(all_tournaments(4, false).size() == 64);
  CHECK_THROWS(all_tournaments(7, false));
  CHECK_THROWS(all_tournaments(9, true));
}

TEST_CASE("canonical code is permutation invariant") {
  Digraph t = near_regular_t4();
  uint64_t code = canonical_adjacency_code(t);
  // Relabel by a fixed permutation and re-canonicalize.
  std::vector<int> perm{2, 0, 3, 1};
  Digraph relabeled(4);
  for (const Edge& e : t.edges()) relabeled.add_edge(perm[e.from], perm[e.to]);
  CHECK(canonical_adjacency_code(relabeled) == code);
  CHECK(digraph_from_code(code, 4).edge_count() == t.edge_count());
}

TEST_CASE("iso and labeled enumeration agree on (ex, pn) multisets for n = 4") {
  std::map<std::pair<long long, int>, long long> labeled_hist;
  for (const Digraph& t : all_tournaments(4, false))
    ++labeled_hist[{total_excess(t), path_number_exact(t).path_number}];

  // Expand each class by its orbit size: n! / |Aut|, with |Aut| counted
  // directly over the 24 permutations.
  std::map<std::pair<long long, int>, long long> iso_hist;
  for (const Digraph& t : all_tournaments(4, true)) {
    std::vector<int> perm{0, 1, 2, 3};
    long long autos = 0;
    do {
      Digraph img(4);
      for (const Edge& e : t.edges()) img.add_edge(perm[e.from], perm[e.to]);
      if (img == t) ++autos;
    } while (std::next_permutation(perm.begin(), perm.end()));
    iso_hist[{total_excess(t), path_number_exact(t).path_number}] += 24 / autos;
  }
  CHECK(labeled_hist == iso_hist);
}

TEST_CASE("verify_conjecture small even sizes") {
  ConjectureReport two = verify_conjecture(2);
  CHECK(two.instances == 2);
  CHECK(two.consistent == 2);
  CHECK(two.max_pn_minus_ex == 0);
  CHECK(two.all_consistent());

  ConjectureReport four = verify_conjecture(4);
  CHECK(four.instances == 64);
  CHECK(four.consistent == 64);
  CHECK(four.violations.empty());

  VerifyOptions iso;
  iso.iso = true;
  ConjectureReport four_iso = verify_conjecture(4, iso);
  CHECK(four_iso.instances == 4);
  CHECK(four_iso.all_consistent());

  CHECK_THROWS_AS(verify_conjecture(3), std::invalid_argument);

  VerifyOptions sample;
  sample.samples = 10;
  sample.seed = 99;
  ConjectureReport sampled = verify_conjecture(6, sample);
  CHECK(sampled.instances == 10);
  CHECK(sampled.all_consistent());
  CHECK(sampled.mode == "sample");

  std::string json = four.to_json();
  CHECK(json.find("\"instances\": 64") != std::string::npos);
  CHECK(json.find("\"max_pn_minus_ex\": 0") != std::string::npos);
}

TEST_CASE("excess of an even tournament ranges over [n/2, n^2/4], all values hit") {
  for (int n : {2, 4, 6}) {
    std::set<long long> values;
    enumerate_tournaments(n, n == 6, [&](const Digraph& t) {
      long long ex = total_excess(t);
      CHECK(2 * ex >= n);
      CHECK(4 * ex <= n * n);
      values.insert(ex);
    });
    // Every value in the range occurs.
    for (long long v = n / 2; 4 * v <= n * n; ++v) CHECK(values.count(v) == 1);
  }
}

TEST_CASE("odd tournaments also solve exactly (no even-ness in the solver)") {
  for (const Digraph& t : all_tournaments(5, true)) {
    ExactResult r = path_number_exact(t);
    CHECK(r.exact);
    CHECK(r.path_number >= total_excess(t));
    CHECK(4 * r.path_number <= 25);
  }
}
