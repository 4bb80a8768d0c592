#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "pathdec/absorb.hpp"
#include "pathdec/balance.hpp"
#include "pathdec/excess.hpp"
#include "pathdec/generate.hpp"

using namespace pathdec;

namespace {

Digraph tt4() { return generate({GeneratorKind::transitive, 4, 0, 0.5}); }

// A seeded skewed tournament on which the full pipeline is known to succeed;
// frozen after checking the outcome against the classifier.
Digraph frozen_success() {
  return generate({GeneratorKind::skewed, 60, 3, 0.97});
}

}  // namespace

TEST_CASE("absorption structure on TT4 is infeasible and says so") {
  // The three in-paths into 1, 2, 3 must use all three out-edges of the only
  // W+ member 0, leaving no first edge for 0's own out-path; the build has
  // to fail honestly rather than hand back a broken structure.
  AbsorptionBuild b = build_absorption_structure(tt4(), {1, 2, 2, 0.0});
  CHECK_FALSE(b.ok);
  CHECK(b.failure.stage == "fan");
}

TEST_CASE("empty reservoir thresholds fail by name") {
  Digraph nr6 = generate({GeneratorKind::near_regular, 6, 0, 0.5});
  AbsorptionBuild b = build_absorption_structure(nr6, {1, 2, 3, 0.0});
  CHECK_FALSE(b.ok);
  CHECK(b.failure.stage == "threshold");
  CHECK(b.failure.detail.find("s = 3") != std::string::npos);
}

TEST_CASE("non-tournaments and bad params are rejected as values") {
  Digraph sparse = Digraph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(build_absorption_structure(sparse, {1, 2, 1, 0.0}).failure.stage ==
        "precheck");
  CHECK(build_absorption_structure(tt4(), {0, 2, 1, 0.0}).failure.stage ==
        "params");
  // The cyclic triangle is a tournament, but has no excess anywhere.
  Digraph c3 = Digraph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
  CHECK(build_absorption_structure(c3, {1, 2, 1, 0.0}).failure.stage ==
        "threshold");
}

TEST_CASE("successful build satisfies every structure invariant") {
  Digraph t = frozen_success();
  AbsorptionParams params = AbsorptionParams::suggest(t);
  AbsorptionBuild b = build_absorption_structure(t, params);
  REQUIRE(b.ok);
  CHECK(b.structure.validate(t));

  // Spot checks on top of validate(): per-vertex counts and length caps.
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    CHECK(b.structure.in_paths[v].size() == static_cast<size_t>(params.ell));
    CHECK(b.structure.out_paths[v].size() == static_cast<size_t>(params.ell));
    for (const Path& p : b.structure.in_paths[v]) CHECK(p.length() <= params.m);
  }
  Digraph h = b.structure.union_graph(t.vertex_count());
  for (Vertex v = 0; v < t.vertex_count(); ++v) CHECK(h.degree(v) <= params.s);
}

TEST_CASE("full pipeline produces a perfect decomposition when it succeeds") {
  Digraph t = frozen_success();
  AbsorbResult r = absorb_and_decompose(t, AbsorptionParams::suggest(t));
  REQUIRE(r.ok);
  Classification c = classify_decomposition(t, r.decomposition.paths);
  CHECK(c.kind == DecompositionKind::perfect);
  CHECK(r.decomposition.size() == total_excess(t));

  std::string trace = r.trace.to_json();
  CHECK(trace.find("\"stage\": \"absorption\"") != std::string::npos);
  CHECK(trace.find("\"stage\": \"validate\"") != std::string::npos);
  CHECK(trace.find("ex(H) = ell*n") != std::string::npos);
}

TEST_CASE("pipeline failures carry the failing stage in the trace") {
  AbsorbResult r = absorb_and_decompose(tt4(), {1, 2, 2, 0.0});
  CHECK_FALSE(r.ok);
  CHECK(r.failure.stage == "fan");
  CHECK(r.decomposition.paths.empty());
  REQUIRE(!r.trace.stages.empty());
  CHECK_FALSE(r.trace.stages.back().ok);
}

TEST_CASE("pipeline never emits an invalid decomposition across a sweep") {
  int successes = 0;
  for (uint64_t seed = 0; seed < 12; ++seed) {
    Digraph t = generate({GeneratorKind::skewed, 30, seed, 0.93});
    AbsorbResult r = absorb_and_decompose(t, AbsorptionParams::suggest(t));
    if (!r.ok) {
      CHECK(!r.failure.stage.empty());
      continue;
    }
    ++successes;
    Classification c = classify_decomposition(t, r.decomposition.paths);
    CHECK(c.kind == DecompositionKind::perfect);
    CHECK(r.decomposition.size() == total_excess(t));
  }
  MESSAGE("pipeline successes at n=30: ", successes, "/12");
}

TEST_CASE("suggest yields legal parameters") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Digraph t = generate({GeneratorKind::skewed, 24, seed, 0.8});
    AbsorptionParams p = AbsorptionParams::suggest(t);
    CHECK(p.ell >= 1);
    CHECK(p.m >= 1);
    CHECK(p.s >= 1);
  }
}

TEST_CASE("balance_sets: constant f makes every set the whole universe") {
  BalanceRequest req;
  req.universe = 4;
  req.f = {1, 1, 1, 1};
  req.t = 2;
  req.m = 1;
  req.anchors = {{0, 1}, {2, 3}, {2, 3}, {0, 1}};
  BalanceFamily fam = balance_sets(req);
  REQUIRE(fam.sets.size() == 4);
  for (const auto& s : fam.sets) CHECK(s.size() == 4);
  CHECK(check_balance_family(req, fam));
}

TEST_CASE("balance_sets: indicator f on eight elements") {
  BalanceRequest req;
  req.universe = 8;
  req.f = {1, 0, 0, 0, 0, 0, 0, 0};
  req.t = 2;
  req.m = 1;
  req.anchors = {{1, 2}, {3, 4}, {5, 6}, {7, 0}};
  BalanceFamily fam = balance_sets(req);
  CHECK(check_balance_family(req, fam));
  std::vector<int> count(8, 0);
  for (const auto& s : fam.sets)
    for (int v : s) ++count[v];
  CHECK(count[0] == 4);  // f + (2t-1)m = 1 + 3
  for (int v = 1; v < 8; ++v) CHECK(count[v] == 3);
  for (const auto& s : fam.sets) CHECK(s.size() >= 4);  // (1 - 1/2) * 8
}

TEST_CASE("balance_sets rejects malformed requests") {
  BalanceRequest req;
  req.universe = 6;
  req.f = {2, 1, 0, 0, 1, 2};
  req.t = 2;
  req.m = 2;
  req.anchors.assign(8, {0, 1});
  // x_i, y_i, x_{tm+i}, y_{tm+i} collapse to two elements.
  CHECK_THROWS_WITH_AS(balance_sets(req),
                       "anchors x_i, y_i, x_{tm+i}, y_{tm+i} not distinct at "
                       "i = 0",
                       std::invalid_argument);

  req.anchors = {{0, 1}, {0, 1}, {0, 1}, {0, 1},
                 {2, 3}, {2, 3}, {2, 3}, {2, 3}};
  BalanceFamily fam = balance_sets(req);
  CHECK(check_balance_family(req, fam));

  BalanceRequest bad = req;
  bad.f = {1, 1, 0, 0, 1, 1};  // max f != m
  CHECK_THROWS_AS(balance_sets(bad), std::invalid_argument);

  BalanceRequest tiny = req;
  tiny.universe = 3;
  tiny.f = {2, 1, 0};
  CHECK_THROWS_AS(balance_sets(tiny), std::invalid_argument);  // 2t > |V|
}

TEST_CASE("balance_sets random property sweep") {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    SplitMix64 rng(seed);
    BalanceRequest req;
    req.universe = 8 + static_cast<int>(rng.next() % 20);
    req.t = 1 + static_cast<int>(rng.next() % 3);
    req.m = 1 + static_cast<int>(rng.next() % 3);
    if (req.t * req.m > req.universe || 2 * req.t > req.universe) continue;
    req.f.resize(req.universe);
    for (int& x : req.f) x = static_cast<int>(rng.next() % (req.m + 1));
    req.f[rng.next() % req.universe] = req.m;
    const int tm = req.t * req.m;
    bool ok_anchors = true;
    for (int i = 0; i < 2 * tm; ++i) {
      int x = static_cast<int>(rng.next() % req.universe);
      int y = static_cast<int>(rng.next() % req.universe);
      req.anchors.push_back({x, y});
    }
    for (int i = 0; i < tm; ++i) {
      std::set<int> four{req.anchors[i].first, req.anchors[i].second,
                         req.anchors[tm + i].first, req.anchors[tm + i].second};
      if (four.size() != 4) ok_anchors = false;
    }
    if (!ok_anchors) continue;
    BalanceFamily fam = balance_sets(req);
    CHECK(check_balance_family(req, fam));
  }
}
