#include "pathdec/construct.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "flow_network.hpp"
#include "pathdec/excess.hpp"

namespace pathdec {

namespace {

// Longest path of a DAG in the given topological order; ties resolved by
// first improvement, end vertex by lowest index.
Path longest_dag_path(const Digraph& d, const std::vector<Vertex>& topo) {
  const int n = d.vertex_count();
  std::vector<int> dist(n, 0);
  std::vector<Vertex> pred(n, -1);
  for (Vertex u : topo) {
    for (Vertex v : d.out_neighbors(u)) {
      if (dist[u] + 1 > dist[v]) {
        dist[v] = dist[u] + 1;
        pred[v] = u;
      }
    }
  }
  Vertex end = 0;
  for (Vertex v = 1; v < n; ++v)
    if (dist[v] > dist[end]) end = v;
  std::vector<Vertex> verts{end};
  while (pred[end] != -1) {
    end = pred[end];
    verts.push_back(end);
  }
  std::reverse(verts.begin(), verts.end());
  return Path(std::move(verts));
}

}  // namespace

PathDecomposition acyclic_perfect_decomposition(const Digraph& d) {
  if (auto cyc = d.find_cycle(); !cyc.empty())
    throw CyclicInputError("input is not acyclic; witness " +
                               Cycle(cyc).to_string(),
                           Cycle(cyc));

  PathDecomposition result;
  result.kind = DecompositionKind::perfect;

  Digraph residual = d;
  long long ex = total_excess(residual);
  while (residual.edge_count() > 0) {
    std::vector<Vertex> topo = residual.topological_order();
    Path p = longest_dag_path(residual, topo);
    residual = residual.minus_edges(p.edges());
    long long ex_after = total_excess(residual);
    if (ex_after != ex - 1)
      throw std::logic_error(
          "removing a maximum path changed the excess by " +
          std::to_string(ex - ex_after) + ", expected 1");
    ex = ex_after;
    result.paths.push_back(std::move(p));
  }

  if (static_cast<long long>(result.paths.size()) != total_excess(d))
    throw std::logic_error("acyclic decomposition size differs from ex(D)");
  return result;
}

std::pair<Digraph, Digraph> split_eulerian(const Digraph& d) {
  Digraph euler(d.vertex_count());
  Digraph residual = d;
  while (true) {
    std::vector<Vertex> cyc = residual.find_cycle();
    if (cyc.empty()) break;
    for (const Edge& e : Cycle(cyc).edges()) {
      residual.remove_edge(e.from, e.to);
      euler.add_edge(e.from, e.to);
    }
  }
  return {std::move(euler), std::move(residual)};
}

bool meets_cycle_length_bound(int cycle_length, int n, long long m) {
  if (n <= 0) return true;
  long long len_part = cycle_length - 1;
  // len-1 >= m^2 / (24 n^3)
  long long n3 = static_cast<long long>(n) * n * n;
  if (len_part * 24 * n3 < m * m) return false;
  // len-1 >= floor(sqrt(m/n)): largest k with k*k*n <= m
  long long k = 0;
  while ((k + 1) * (k + 1) * n <= m) ++k;
  return len_part >= k;
}

namespace {

// Exhaustive longest-cycle search over simple cycles whose minimum vertex is
// the DFS root; stops early once `stop_at` is reached.
struct ExactCycleSearch {
  const Digraph& d;
  int stop_at;
  int best_len = 0;
  std::vector<Vertex> best;
  std::vector<char> visited;
  std::vector<Vertex> path;
  Vertex root = 0;
  bool done = false;

  explicit ExactCycleSearch(const Digraph& graph, int stop)
      : d(graph), stop_at(stop), visited(graph.vertex_count(), 0) {}

  void dfs(Vertex u) {
    for (Vertex w : d.out_neighbors(u)) {
      if (done) return;
      if (w == root) {
        if (static_cast<int>(path.size()) > best_len) {
          best_len = static_cast<int>(path.size());
          best = path;
          if (best_len >= stop_at) {
            done = true;
            return;
          }
        }
      } else if (w > root && !visited[w]) {
        visited[w] = 1;
        path.push_back(w);
        dfs(w);
        path.pop_back();
        visited[w] = 0;
      }
    }
  }

  void run() {
    for (root = 0; root < d.vertex_count() && !done; ++root) {
      if (d.out_degree(root) == 0) continue;
      path.assign(1, root);
      visited[root] = 1;
      dfs(root);
      visited[root] = 0;
    }
  }
};

// Deterministic greedy walks from every start; the best back edge seen over
// all walks closes the reported cycle.
std::vector<Vertex> greedy_cycle(const Digraph& d) {
  const int n = d.vertex_count();
  std::vector<Vertex> best;
  std::vector<int> pos(n);
  for (Vertex s = 0; s < n; ++s) {
    if (d.out_degree(s) == 0) continue;
    std::fill(pos.begin(), pos.end(), -1);
    std::vector<Vertex> walk{s};
    pos[s] = 0;
    while (true) {
      Vertex u = walk.back();
      Vertex next = -1;
      int next_score = -1;
      for (Vertex w : d.out_neighbors(u)) {
        if (pos[w] >= 0) {
          int len = static_cast<int>(walk.size()) - pos[w];
          if (len > static_cast<int>(best.size()))
            best.assign(walk.begin() + pos[w], walk.end());
        } else {
          int score = 0;
          for (Vertex x : d.out_neighbors(w))
            if (pos[x] < 0) ++score;
          if (score > next_score) {
            next_score = score;
            next = w;
          }
        }
      }
      if (next < 0) break;
      pos[next] = static_cast<int>(walk.size());
      walk.push_back(next);
    }
  }
  return best;
}

}  // namespace

LongCycleResult long_cycle(const Digraph& d, LongCycleMode mode) {
  if (d.edge_count() == 0)
    throw std::invalid_argument("long_cycle requires a nonempty digraph");
  if (!d.is_eulerian())
    throw std::invalid_argument("long_cycle requires an Eulerian digraph");

  const int n = d.vertex_count();
  const long long m = d.edge_count();

  LongCycleResult result;
  if (mode == LongCycleMode::heuristic) {
    std::vector<Vertex> greedy = greedy_cycle(d);
    if (!greedy.empty() &&
        meets_cycle_length_bound(static_cast<int>(greedy.size()), n, m)) {
      result.cycle = Cycle(std::move(greedy)).rotated_to_min();
      result.meets_bound = true;
      return result;
    }
    // Fall back to exact search, stopping as soon as the bound is met.
    int target = 2;
    while (!meets_cycle_length_bound(target, n, m)) ++target;
    ExactCycleSearch search(d, target);
    search.run();
    if (search.best.empty())
      throw std::logic_error("Eulerian digraph with edges but no cycle");
    result.cycle = Cycle(std::move(search.best)).rotated_to_min();
    // A search that ran to completion found the true maximum.
    result.exact = !search.done;
    result.meets_bound = meets_cycle_length_bound(result.cycle.length(), n, m);
    if (!result.meets_bound)
      throw std::logic_error("no cycle meets the Eulerian length bound");
    return result;
  }

  ExactCycleSearch search(d, n);
  search.run();
  if (search.best.empty())
    throw std::logic_error("Eulerian digraph with edges but no cycle");
  result.cycle = Cycle(std::move(search.best)).rotated_to_min();
  result.exact = true;
  result.meets_bound = meets_cycle_length_bound(result.cycle.length(), n, m);
  if (!result.meets_bound)
    throw std::logic_error("maximum cycle misses the Eulerian length bound");
  return result;
}

std::vector<Cycle> greedy_cycle_decomposition(const Digraph& d) {
  if (!d.is_eulerian())
    throw std::invalid_argument("cycle decomposition requires an Eulerian digraph");
  const bool oriented = d.is_oriented();
  const int n = d.vertex_count();
  const long long m = d.edge_count();

  std::vector<Cycle> cycles;
  Digraph residual = d;
  while (residual.edge_count() > 0) {
    LongCycleResult r = long_cycle(residual, LongCycleMode::heuristic);
    residual = residual.minus_edges(r.cycle.edges());
    cycles.push_back(std::move(r.cycle));
  }

  const long long count = static_cast<long long>(cycles.size());
  if (oriented && count * 3 > m)
    throw std::logic_error("cycle count exceeds m/3");
  if (n >= 2) {
    double cap = 50.0 * std::pow(n, 4.0 / 3.0) * std::log(n);
    if (static_cast<double>(count) > cap)
      throw std::logic_error("cycle count exceeds 50 n^{4/3} ln n");
  }
  return cycles;
}

namespace {

// One representative per interval, preferring the vertex with the most
// remaining multiplicity, ties to the lowest vertex. Returns -1 if the whole
// interval is exhausted.
Vertex pick_rep(const std::vector<Vertex>& interval, std::vector<int>& remaining) {
  Vertex best = -1;
  for (Vertex v : interval)
    if (remaining[v] > 0 && (best == -1 || remaining[v] > remaining[best]))
      best = v;
  if (best != -1) --remaining[best];
  return best;
}

// Two representatives for each short cycle via capacitated matchings, one
// round per representative. On failure, fills result.detail and the Hall
// witness (the reachable side of the final cut).
void run_short_matchings(RepresentativeResult& result,
                         const std::vector<int>& short_cycles,
                         std::vector<int>& remaining) {
  const int n = static_cast<int>(remaining.size());
  for (int round = 0; round < 2 && !short_cycles.empty(); ++round) {
    detail::FlowNetwork net(static_cast<int>(short_cycles.size()) + n + 2);
    const int source = static_cast<int>(short_cycles.size()) + n;
    const int sink = source + 1;
    std::vector<std::vector<std::pair<Vertex, int>>> arcs(short_cycles.size());
    for (size_t i = 0; i < short_cycles.size(); ++i) {
      net.add_edge(source, static_cast<int>(i), 1);
      const CycleWithReps& cwr = result.cycles[short_cycles[i]];
      for (Vertex v : cwr.cycle.vertices()) {
        if (round == 1 && !cwr.reps.empty() && v == cwr.reps.front()) continue;
        if (remaining[v] <= 0) continue;
        int id = net.add_edge(static_cast<int>(i),
                              static_cast<int>(short_cycles.size()) + v, 1);
        arcs[i].push_back({v, id});
      }
    }
    for (Vertex v = 0; v < n; ++v)
      if (remaining[v] > 0)
        net.add_edge(static_cast<int>(short_cycles.size()) + v, sink,
                     remaining[v]);

    long long flow = net.max_flow(source, sink);
    if (flow < static_cast<long long>(short_cycles.size())) {
      std::vector<char> reach = net.residual_reachable(source);
      for (size_t i = 0; i < short_cycles.size(); ++i)
        if (reach[i]) result.infeasible_cycles.push_back(short_cycles[i]);
      result.detail = "Hall condition fails for " +
                      std::to_string(result.infeasible_cycles.size()) +
                      " short cycles (round " + std::to_string(round + 1) + ")";
      return;
    }
    for (size_t i = 0; i < short_cycles.size(); ++i) {
      for (auto [v, id] : arcs[i]) {
        if (net.flow_on(id) == 1) {
          result.cycles[short_cycles[i]].reps.push_back(v);
          --remaining[v];
          break;
        }
      }
    }
  }
}

}  // namespace

RepresentativeResult assign_representatives(
    const std::vector<Cycle>& cycles, int interval_cap,
    const std::vector<int>& multiplicity_cap) {
  RepresentativeResult result;
  if (interval_cap < 2)
    throw std::invalid_argument("interval_cap must be at least 2");
  const int n = static_cast<int>(multiplicity_cap.size());
  for (const Cycle& c : cycles)
    for (Vertex v : c.vertices())
      if (v < 0 || v >= n)
        throw std::invalid_argument("cycle vertex " + std::to_string(v) +
                                    " outside the multiplicity map");

  std::vector<int> remaining = multiplicity_cap;
  result.cycles.reserve(cycles.size());
  std::vector<int> short_cycles;
  std::vector<int> long_cycles;

  for (size_t ci = 0; ci < cycles.size(); ++ci) {
    result.cycles.push_back({cycles[ci], {}});
    (cycles[ci].length() <= interval_cap ? short_cycles : long_cycles)
        .push_back(static_cast<int>(ci));
  }

  // Short cycles are the tight side (two representatives from few vertices),
  // so their matchings run before the long-cycle intervals spend any caps.
  run_short_matchings(result, short_cycles, remaining);
  if (!result.detail.empty()) return result;

  const int hi = interval_cap / 2;
  for (int ci : long_cycles) {
    const Cycle& c = result.cycles[ci].cycle;
    // Divide into the minimum number of intervals of length <= cap/2,
    // sizes as even as possible (so they stay near cap/4 from below too).
    const int len = c.length();
    const int parts = (len + hi - 1) / hi;
    const int base = len / parts;
    const int extra = len % parts;
    const auto& verts = c.vertices();
    std::vector<Vertex> reps;
    int offset = 0;
    for (int i = 0; i < parts; ++i) {
      int size = base + (i < extra ? 1 : 0);
      std::vector<Vertex> interval(verts.begin() + offset,
                                   verts.begin() + offset + size);
      Vertex rep = pick_rep(interval, remaining);
      if (rep == -1) {
        result.detail = "interval of cycle " + std::to_string(ci) +
                        " has no vertex with remaining multiplicity";
        return result;
      }
      reps.push_back(rep);
      offset += size;
    }
    result.cycles[ci].reps = std::move(reps);
  }

  // Short-cycle representatives in cycle order.
  for (int ci : short_cycles) {
    CycleWithReps& cwr = result.cycles[ci];
    const auto& verts = cwr.cycle.vertices();
    std::sort(cwr.reps.begin(), cwr.reps.end(), [&](Vertex a, Vertex b) {
      auto pa = std::find(verts.begin(), verts.end(), a);
      auto pb = std::find(verts.begin(), verts.end(), b);
      return pa < pb;
    });
  }

  result.ok = true;
  return result;
}

}  // namespace pathdec
