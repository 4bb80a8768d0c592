#include "pathdec/absorb.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "pathdec/bipartite.hpp"
#include "pathdec/construct.hpp"
#include "pathdec/excess.hpp"
#include "pathdec/menger.hpp"

namespace pathdec {

// The asymptotic parameter choices collapse at small n (the degree cap s
// would have to exceed n), so the suggestion works from the actual excess
// profile instead. With c usable sources of threshold excess s, the sweep
// freezes a source near degree s/4, so roughly c * (s/4 + 4) fan starts are
// available against a demand of ell * (n - c); the union degree at a source
// stays near s/4 + 4 + 2*ell, which must fit under s.
AbsorptionParams AbsorptionParams::suggest(const Digraph& t) {
  const int n = std::max(1, t.vertex_count());
  AbsorptionParams p;
  p.m = std::max(2, static_cast<int>(std::ceil(4.0 * std::pow(n, 1.0 / 9.0))));

  std::vector<int> plus, minus;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    int e = t.out_degree(v) - t.in_degree(v);
    if (e > 0) plus.push_back(e);
    if (e < 0) minus.push_back(-e);
  }
  std::sort(plus.rbegin(), plus.rend());
  std::sort(minus.rbegin(), minus.rend());
  if (plus.empty() || minus.empty()) {
    p.ell = 1;
    p.s = 2;
    return p;
  }

  const int levels = static_cast<int>(std::min(plus.size(), minus.size()));
  for (int ell = 2; ell >= 1; --ell) {
    int best_c = -1;
    double best_margin = 0;
    for (int c = std::max(2, ell + 1); c <= levels; ++c) {
      int s = std::min(plus[c - 1], minus[c - 1]);
      if (s < 2) break;
      // A source freezes near degree s/4, of which 2*ell goes to its own
      // step; the rest is budget for fan starts. Demand gets a safety
      // factor because interiors consume source degree too.
      double capacity = c * (s / 4.0 - 2.0 * ell);
      double demand = 1.25 * ell * (n - c);
      if (capacity < demand) continue;
      if (best_c == -1 || capacity - demand > best_margin) {
        best_c = c;
        best_margin = capacity - demand;
      }
    }
    if (best_c != -1) {
      p.ell = ell;
      p.s = std::max(2, std::min(plus[best_c - 1], minus[best_c - 1]));
      return p;
    }
  }

  p.ell = 1;
  p.s = std::max(2, std::min(plus[0], minus[0]) / 2);
  return p;
}

Digraph AbsorptionStructure::union_graph(int n) const {
  Digraph h(n);
  for (const auto& fam : {std::cref(in_paths), std::cref(out_paths)})
    for (const auto& fan : fam.get())
      for (const Path& p : fan)
        for (const Edge& e : p.edges()) h.add_edge(e.from, e.to);
  return h;
}

CheckResult AbsorptionStructure::validate(const Digraph& host) const {
  const int n = host.vertex_count();
  if (static_cast<int>(in_paths.size()) != n ||
      static_cast<int>(out_paths.size()) != n)
    return {false, "family size differs from vertex count"};

  auto [w_plus, w_minus] = threshold_sets(host, params.s);
  std::set<Vertex> wp(w_plus.begin(), w_plus.end());
  std::set<Vertex> wm(w_minus.begin(), w_minus.end());

  std::set<Edge> all_edges;
  for (Vertex v = 0; v < n; ++v) {
    for (int side = 0; side < 2; ++side) {
      const auto& fan = side == 0 ? in_paths[v] : out_paths[v];
      if (static_cast<int>(fan.size()) != params.ell)
        return {false, "vertex " + std::to_string(v) + " has " +
                           std::to_string(fan.size()) + " paths, want " +
                           std::to_string(params.ell)};
      std::set<Vertex> interior_seen;
      for (const Path& p : fan) {
        std::string why;
        if (!p.degenerate() && !p.validate_against(host, &why))
          return {false, "invalid path at vertex " + std::to_string(v) + ": " + why};
        if (p.length() > params.m)
          return {false, "path at vertex " + std::to_string(v) +
                             " longer than m = " + std::to_string(params.m)};
        Vertex anchor = side == 0 ? p.target() : p.source();
        Vertex far_end = side == 0 ? p.source() : p.target();
        if (anchor != v)
          return {false, "path " + p.to_string() + " does not anchor at " +
                             std::to_string(v)};
        if (!p.degenerate() && side == 0 && !wp.count(far_end))
          return {false, "in-path " + p.to_string() + " does not start in W+_s"};
        if (!p.degenerate() && side == 1 && !wm.count(far_end))
          return {false, "out-path " + p.to_string() + " does not end in W-_s"};
        if (p.degenerate() && side == 0 && !wp.count(v))
          return {false, "degenerate in-path at " + std::to_string(v) +
                             " outside W+_s"};
        if (p.degenerate() && side == 1 && !wm.count(v))
          return {false, "degenerate out-path at " + std::to_string(v) +
                             " outside W-_s"};
        for (Vertex u : p.vertices()) {
          if (u == v) continue;
          if (!interior_seen.insert(u).second)
            return {false, "fan at vertex " + std::to_string(v) +
                               " reuses vertex " + std::to_string(u)};
        }
        for (const Edge& e : p.edges())
          if (!all_edges.insert(e).second)
            return {false, "edge " + std::to_string(e.from) + "->" +
                               std::to_string(e.to) + " used twice"};
      }
    }
  }

  Digraph h = union_graph(n);
  for (Vertex v = 0; v < n; ++v)
    if (h.degree(v) > params.s)
      return {false, "union degree " + std::to_string(h.degree(v)) +
                         " at vertex " + std::to_string(v) + " exceeds s = " +
                         std::to_string(params.s)};
  return {};
}

std::string PipelineTrace::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const StageRecord& rec : stages) {
    nlohmann::ordered_json row;
    row["stage"] = rec.stage;
    row["input_edges"] = rec.input_edges;
    row["output_summary"] = rec.summary;
    row["assertion_results"] = rec.assertions;
    row["ok"] = rec.ok;
    j.push_back(row);
  }
  return j.dump(2) + "\n";
}

namespace {

AbsorptionBuild build_failure(std::string stage, std::string detail) {
  AbsorptionBuild b;
  b.failure = {std::move(stage), std::move(detail)};
  return b;
}

}  // namespace

AbsorptionBuild build_absorption_structure(const Digraph& t,
                                           const AbsorptionParams& params) {
  if (params.ell < 1 || params.m < 1 || params.s < 1)
    return build_failure("params", "ell, m, s must all be >= 1");
  if (!t.is_tournament())
    return build_failure("precheck", "input is not a tournament");

  const int n = t.vertex_count();
  auto [w_plus, w_minus] = threshold_sets(t, params.s);
  if (w_plus.empty())
    return build_failure("threshold",
                         "W+_s is empty for s = " + std::to_string(params.s));
  if (w_minus.empty())
    return build_failure("threshold",
                         "W-_s is empty for s = " + std::to_string(params.s));
  std::vector<char> in_wp(n, 0), in_wm(n, 0);
  for (Vertex v : w_plus) in_wp[v] = 1;
  for (Vertex v : w_minus) in_wm[v] = 1;

  AbsorptionBuild build;
  build.structure.params = params;
  build.structure.in_paths.resize(n);
  build.structure.out_paths.resize(n);
  Digraph used(n);  // union built so far

  auto frozen_set = [&](Vertex current) {
    std::vector<Vertex> frozen;
    for (Vertex w = 0; w < n; ++w)
      if (w != current && 4 * used.degree(w) >= params.s) frozen.push_back(w);
    return frozen;
  };

  auto grow_fan = [&](Vertex v, bool inbound) -> std::optional<std::string> {
    auto& slot =
        inbound ? build.structure.in_paths[v] : build.structure.out_paths[v];
    if (inbound ? in_wp[v] : in_wm[v]) {
      slot.assign(params.ell, Path({v}));
      return std::nullopt;
    }
    std::vector<Vertex> frozen = frozen_set(v);
    if (!inbound) {
      // Keep the out-fan off the in-paths of the same vertex, so an
      // unspliced in/out pair at v is always vertex-disjoint except at v.
      for (const Path& p : build.structure.in_paths[v])
        for (Vertex u : p.vertices())
          if (u != v) frozen.push_back(u);
      std::sort(frozen.begin(), frozen.end());
      frozen.erase(std::unique(frozen.begin(), frozen.end()), frozen.end());
    }
    std::vector<char> is_frozen(n, 0);
    for (Vertex w : frozen) is_frozen[w] = 1;

    Digraph residual = t.minus_edges(used.edges()).minus_vertices(frozen);
    if (!inbound) residual = residual.reversed();

    std::vector<Vertex> sources;
    for (Vertex w : (inbound ? w_plus : w_minus))
      if (!is_frozen[w] && w != v) sources.push_back(w);
    if (sources.empty())
      return "no unfrozen " + std::string(inbound ? "W+_s" : "W-_s") +
             " source available for vertex " + std::to_string(v);

    FanResult fan = disjoint_path_fan(residual, sources, v, params.ell,
                                      params.m, /*distinct_sources=*/true);
    int usable = 0;
    for (const Path& p : fan.fan.paths)
      if (p.length() <= params.m) ++usable;
    if (usable < params.ell)
      return "fan shortfall at vertex " + std::to_string(v) + ": " +
             std::to_string(usable) + " of " + std::to_string(params.ell) +
             " paths within length " + std::to_string(params.m);

    for (int j = 0; j < params.ell; ++j) {
      Path p = fan.fan.paths[j];
      if (!inbound) {
        std::vector<Vertex> verts = p.vertices();
        std::reverse(verts.begin(), verts.end());
        p = Path(std::move(verts));
      }
      for (const Edge& e : p.edges()) used.add_edge(e.from, e.to);
      slot.push_back(std::move(p));
    }
    return std::nullopt;
  };

  for (Vertex v = 0; v < n; ++v) {
    if (auto err = grow_fan(v, true)) return build_failure("fan", *err);
    if (auto err = grow_fan(v, false)) return build_failure("fan", *err);
  }

  for (Vertex v = 0; v < n; ++v)
    if (used.degree(v) > params.s)
      return build_failure(
          "degree-cap", "union degree " + std::to_string(used.degree(v)) +
                            " at vertex " + std::to_string(v) +
                            " exceeds s = " + std::to_string(params.s));

  if (CheckResult check = build.structure.validate(t); !check)
    throw std::logic_error("absorption structure inconsistent: " + check.detail);
  build.ok = true;
  return build;
}

namespace {

StageRecord make_record(const std::string& stage, long long input_edges) {
  StageRecord rec;
  rec.stage = stage;
  rec.input_edges = input_edges;
  return rec;
}

AbsorbResult pipeline_failure(AbsorbResult result, PipelineTrace trace,
                              std::string stage, std::string detail) {
  result.ok = false;
  result.failure = {stage, detail};
  StageRecord rec = make_record(stage, 0);
  rec.ok = false;
  rec.summary = detail;
  trace.stages.push_back(rec);
  result.trace = std::move(trace);
  return result;
}

}  // namespace

AbsorbResult absorb_and_decompose(const Digraph& t,
                                  const AbsorptionParams& params) {
  AbsorbResult result;
  PipelineTrace trace;
  const int n = t.vertex_count();

  // Stage 1: the absorption reservoir.
  AbsorptionBuild build = build_absorption_structure(t, params);
  if (!build.ok)
    return pipeline_failure(std::move(result), std::move(trace),
                            build.failure.stage, build.failure.detail);
  {
    StageRecord rec = make_record("absorption", t.edge_count());
    Digraph h = build.structure.union_graph(n);
    rec.summary = "reservoir of " + std::to_string(2LL * n * params.ell) +
                  " paths, " + std::to_string(h.edge_count()) + " edges";
    rec.assertions.push_back("structure invariants hold");
    trace.stages.push_back(rec);
  }

  const AbsorptionStructure& structure = build.structure;
  Digraph reservoir = structure.union_graph(n);
  Digraph residual = t.minus_edges(reservoir.edges());

  // Stage 2: excess bookkeeping for the removal.
  {
    StageRecord rec = make_record("remove-reservoir", t.edge_count());
    bool dominated = excess_dominated(reservoir, t);
    long long lhs = total_excess(t);
    long long rhs = total_excess(reservoir) + total_excess(residual);
    rec.assertions.push_back(std::string("componentwise domination: ") +
                             (dominated ? "yes" : "NO"));
    rec.assertions.push_back("ex(T) = ex(H) + ex(T - H): " + std::to_string(lhs) +
                             " vs " + std::to_string(rhs));
    long long expected_ex_h = static_cast<long long>(params.ell) * n;
    rec.assertions.push_back("ex(H) = ell*n: " +
                             std::to_string(total_excess(reservoir)) + " vs " +
                             std::to_string(expected_ex_h));
    rec.summary = "residual has " + std::to_string(residual.edge_count()) +
                  " edges, excess " + std::to_string(total_excess(residual));
    bool ok = dominated && lhs == rhs && total_excess(reservoir) == expected_ex_h;
    rec.ok = ok;
    trace.stages.push_back(rec);
    if (!ok)
      return pipeline_failure(std::move(result), std::move(trace), "remove-reservoir",
                              "excess bookkeeping failed; see trace");
  }

  // Stage 3: Eulerian / acyclic split of the residual.
  auto [euler, acyclic_rest] = split_eulerian(residual);
  {
    StageRecord rec = make_record("split-eulerian", residual.edge_count());
    rec.summary = "Eulerian part " + std::to_string(euler.edge_count()) +
                  " edges, acyclic part " +
                  std::to_string(acyclic_rest.edge_count()) + " edges";
    bool euler_ok = euler.is_eulerian();
    bool acyclic_ok = acyclic_rest.is_acyclic();
    bool partition_ok =
        euler.edge_count() + acyclic_rest.edge_count() == residual.edge_count();
    rec.assertions.push_back(std::string("Eulerian part balanced: ") +
                             (euler_ok ? "yes" : "NO"));
    rec.assertions.push_back(std::string("rest acyclic: ") +
                             (acyclic_ok ? "yes" : "NO"));
    rec.assertions.push_back(std::string("edge partition: ") +
                             (partition_ok ? "yes" : "NO"));
    rec.ok = euler_ok && acyclic_ok && partition_ok;
    trace.stages.push_back(rec);
    if (!rec.ok)
      return pipeline_failure(std::move(result), std::move(trace), "split-eulerian",
                              "split invariants failed");
  }

  // Stage 4: cycle decomposition of the Eulerian part.
  std::vector<Cycle> cycles;
  if (euler.edge_count() > 0) cycles = greedy_cycle_decomposition(euler);
  {
    StageRecord rec = make_record("cycle-decomposition", euler.edge_count());
    rec.summary = std::to_string(cycles.size()) + " cycles";
    trace.stages.push_back(rec);
  }

  // Stage 5: representatives. The interval cap widens beyond n^{2/3} when
  // the per-vertex in-path supply (ell each) would not cover the intervals.
  int interval_cap =
      std::max(2, static_cast<int>(std::ceil(std::pow(std::max(n, 1), 2.0 / 3.0))));
  if (n > 0 && params.ell > 0) {
    long long supply = static_cast<long long>(n) * params.ell;
    interval_cap = std::max<long long>(
        interval_cap, (4LL * euler.edge_count() + supply - 1) / supply);
  }

  // Stages 5-7 run as one bounded retry: assign representatives, splice
  // every cycle interval onto an unused in-path of its opening
  // representative (the spliced path then ends at the next representative),
  // and close each vertex's in/out families by a perfect matching between
  // vertex-disjoint pairs. A representative whose in-paths all collide with
  // its interval, or whose interval blocks the matching, is demoted and the
  // assignment redone; the availability counting of the construction
  // degrades into this retry at small n.
  std::vector<std::vector<char>> in_used(n);
  std::vector<std::vector<Path>> ending(n);  // paths ending at v
  std::vector<int> caps(n, params.ell);
  std::vector<int> reps_at(n, 0);
  std::vector<Path> closed;
  long long total_reps = 0;
  int attempts = 0;
  const int max_attempts = std::max(16, 2 * n);

  while (true) {
    ++attempts;
    total_reps = 0;
    for (Vertex v = 0; v < n; ++v) in_used[v].assign(params.ell, 0);
    for (Vertex v = 0; v < n; ++v) ending[v].clear();
    std::fill(reps_at.begin(), reps_at.end(), 0);
    closed.clear();

    Vertex blocked = -1;
    std::string blocked_stage;

    if (!cycles.empty()) {
      RepresentativeResult reps =
          assign_representatives(cycles, interval_cap, caps);
      if (!reps.ok)
        return pipeline_failure(std::move(result), std::move(trace),
                                "representatives", reps.detail);
      for (const CycleWithReps& cwr : reps.cycles) {
        const auto& rep_list = cwr.reps;
        total_reps += rep_list.size();
        for (Vertex r : rep_list) ++reps_at[r];
        for (size_t j = 0; j < rep_list.size() && blocked == -1; ++j) {
          Vertex from = rep_list[j];
          Vertex to = rep_list[(j + 1) % rep_list.size()];
          Path interval = cwr.cycle.arc(from, to);
          int chosen = -1;
          for (int k = 0; k < params.ell; ++k) {
            if (in_used[from][k]) continue;
            const Path& cand = structure.in_paths[from][k];
            bool disjoint = true;
            for (Vertex u : cand.vertices()) {
              if (u != from && interval.contains(u)) {
                disjoint = false;
                break;
              }
            }
            if (disjoint) {
              chosen = k;
              break;
            }
          }
          if (chosen == -1) {
            blocked = from;
            blocked_stage = "splice";
            break;
          }
          in_used[from][chosen] = 1;
          ending[to].push_back(
              structure.in_paths[from][chosen].joined_with(interval));
        }
        if (blocked != -1) break;
      }
    }

    if (blocked == -1) {
      for (Vertex v = 0; v < n; ++v)
        for (int k = 0; k < params.ell; ++k)
          if (!in_used[v][k]) ending[v].push_back(structure.in_paths[v][k]);

      for (Vertex v = 0; v < n && blocked == -1; ++v) {
        if (static_cast<int>(ending[v].size()) != params.ell)
          return pipeline_failure(std::move(result), std::move(trace), "splice",
                                  "per-vertex ending count is off at vertex " +
                                      std::to_string(v));
        const auto& outs = structure.out_paths[v];
        std::vector<std::pair<int, int>> compat;
        for (int i = 0; i < params.ell; ++i) {
          for (int j = 0; j < params.ell; ++j) {
            bool disjoint = true;
            for (Vertex u : ending[v][i].vertices()) {
              if (u != v && outs[j].contains(u)) {
                disjoint = false;
                break;
              }
            }
            if (disjoint) compat.push_back({i, j});
          }
        }
        BipartiteGraph b = BipartiteGraph::make(params.ell, params.ell, compat);
        MatchingResult match = perfect_matching(b);
        if (!match.perfect) {
          blocked = v;
          blocked_stage = "matching";
          break;
        }
        for (int i = 0; i < params.ell; ++i) {
          Path joined = ending[v][i].joined_with(outs[match.a_match[i]]);
          if (!joined.degenerate()) closed.push_back(std::move(joined));
        }
      }
      if (blocked == -1) break;  // success
    }

    // Retry only helps if the blocked vertex currently hosts representatives.
    bool retryable = !cycles.empty() && caps[blocked] > 0 &&
                     (blocked_stage == "splice" || reps_at[blocked] > 0) &&
                     attempts < max_attempts;
    if (!retryable)
      return pipeline_failure(
          std::move(result), std::move(trace), blocked_stage,
          blocked_stage == "splice"
              ? "no unused in-path at representative " + std::to_string(blocked) +
                    " avoids its cycle interval"
              : "no perfect in/out matching at vertex " + std::to_string(blocked));
    caps[blocked] = 0;
  }

  if (!cycles.empty()) {
    StageRecord rec = make_record("representatives", euler.edge_count());
    rec.summary = std::to_string(total_reps) + " representatives, interval cap " +
                  std::to_string(interval_cap) + ", attempts " +
                  std::to_string(attempts);
    trace.stages.push_back(rec);
  }
  {
    StageRecord rec = make_record("splice-and-match", reservoir.edge_count());
    rec.assertions.push_back("every vertex ends exactly ell paths: yes");
    rec.summary = std::to_string(closed.size()) + " paths through the reservoir";
    trace.stages.push_back(rec);
  }

  // Stage 8: the acyclic rest.
  PathDecomposition rest = acyclic_perfect_decomposition(acyclic_rest);
  {
    StageRecord rec = make_record("acyclic-rest", acyclic_rest.edge_count());
    rec.summary = std::to_string(rest.paths.size()) + " paths";
    trace.stages.push_back(rec);
  }

  // Stage 9: assemble and validate.
  result.decomposition.paths = std::move(closed);
  for (Path& p : rest.paths) result.decomposition.paths.push_back(std::move(p));
  Classification c = classify_decomposition(t, result.decomposition.paths);
  long long ex = total_excess(t);
  {
    StageRecord rec = make_record("validate", t.edge_count());
    rec.assertions.push_back("classifier kind: " + to_string(c.kind));
    rec.assertions.push_back(
        "path count = ex(T): " +
        std::to_string(result.decomposition.size()) + " vs " + std::to_string(ex));
    rec.ok = c.kind == DecompositionKind::perfect &&
             result.decomposition.size() == ex;
    rec.summary = rec.ok ? "perfect decomposition" : "validation failed";
    trace.stages.push_back(rec);
    if (!rec.ok) {
      result.decomposition = {};
      return pipeline_failure(std::move(result), std::move(trace), "validate",
                              "final decomposition failed validation");
    }
  }

  result.decomposition.kind = DecompositionKind::perfect;
  result.ok = true;
  result.trace = std::move(trace);
  return result;
}

}  // namespace pathdec
