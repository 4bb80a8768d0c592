#include "pathdec/exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "pathdec/excess.hpp"

namespace pathdec {

SolveBudget SolveBudget::from_millis(long long ms) {
  if (ms < 0) return {};
  return {ms * 10000};  // ~10k search nodes per millisecond
}

namespace {

// Search state over a fixed edge list; edges toggle dead/alive, degrees and
// the signed excess tally are maintained incrementally.
struct Solver {
  int n;
  std::vector<Edge> edge_list;
  std::vector<std::vector<int>> out_edge_ids;  // ascending by target
  std::vector<char> alive;
  std::vector<int> out_deg, in_deg;
  int alive_count = 0;
  long long ex_abs_sum = 0;  // sum over v of |ex(v)|
  uint64_t mask = 0;         // residual bitmask when m <= 64

  bool use_memo;
  std::unordered_map<uint64_t, int> seen_at;  // residual -> fewest paths used

  long long nodes = 0;
  long long node_limit;
  bool aborted = false;

  int best_count = 0;
  std::vector<std::vector<Vertex>> best_paths;
  std::vector<std::vector<Vertex>> current;
  long long global_lb = 0;
  bool finished = false;

  explicit Solver(const Digraph& d, long long limit)
      : n(d.vertex_count()), node_limit(limit) {
    edge_list = d.edges();
    out_edge_ids.resize(n);
    out_deg.assign(n, 0);
    in_deg.assign(n, 0);
    for (int i = 0; i < static_cast<int>(edge_list.size()); ++i) {
      out_edge_ids[edge_list[i].from].push_back(i);
      ++out_deg[edge_list[i].from];
      ++in_deg[edge_list[i].to];
    }
    alive.assign(edge_list.size(), 1);
    alive_count = static_cast<int>(edge_list.size());
    for (int v = 0; v < n; ++v)
      ex_abs_sum += std::abs(out_deg[v] - in_deg[v]);
    use_memo = edge_list.size() <= 64;
    if (use_memo)
      mask = edge_list.size() == 64 ? ~0ULL : (1ULL << edge_list.size()) - 1;
  }

  int ex_of(int v) const { return out_deg[v] - in_deg[v]; }

  void drop(int id) {
    const Edge& e = edge_list[id];
    alive[id] = 0;
    --alive_count;
    ex_abs_sum -= std::abs(ex_of(e.from)) + std::abs(ex_of(e.to));
    --out_deg[e.from];
    --in_deg[e.to];
    ex_abs_sum += std::abs(ex_of(e.from)) + std::abs(ex_of(e.to));
    if (use_memo) mask &= ~(1ULL << id);
  }

  void restore(int id) {
    const Edge& e = edge_list[id];
    alive[id] = 1;
    ++alive_count;
    ex_abs_sum -= std::abs(ex_of(e.from)) + std::abs(ex_of(e.to));
    ++out_deg[e.from];
    ++in_deg[e.to];
    ex_abs_sum += std::abs(ex_of(e.from)) + std::abs(ex_of(e.to));
    if (use_memo) mask |= 1ULL << id;
  }

  long long lower_bound() const {
    long long lb = ex_abs_sum / 2;
    if (n > 1) {
      long long per_path = n - 1;
      lb = std::max(lb, (alive_count + per_path - 1) / per_path);
    }
    if (alive_count > 0) lb = std::max(lb, 1LL);
    return lb;
  }

  bool tick() {
    ++nodes;
    if (node_limit >= 0 && nodes > node_limit) aborted = true;
    return !aborted && !finished;
  }

  // Greedy decomposition of the current residual; used for the incumbent
  // and as a cheap upper bound. Deterministic.
  std::vector<std::vector<Vertex>> greedy_paths() {
    std::vector<int> dropped;
    std::vector<std::vector<Vertex>> paths;
    while (alive_count > 0) {
      int start = -1;
      for (int v = 0; v < n; ++v)
        if (out_deg[v] > 0 && ex_of(v) > 0) {
          start = v;
          break;
        }
      if (start == -1)
        for (int v = 0; v < n; ++v)
          if (out_deg[v] > 0) {
            start = v;
            break;
          }
      std::vector<Vertex> path{start};
      std::vector<char> on_path(n, 0);
      on_path[start] = 1;
      int tip = start;
      while (true) {
        int chosen = -1, score = -1;
        for (int id : out_edge_ids[tip]) {
          if (!alive[id]) continue;
          int w = edge_list[id].to;
          if (on_path[w]) continue;
          if (out_deg[w] > score) {
            score = out_deg[w];
            chosen = id;
          }
        }
        if (chosen == -1) break;
        drop(chosen);
        dropped.push_back(chosen);
        tip = edge_list[chosen].to;
        on_path[tip] = 1;
        path.push_back(tip);
      }
      paths.push_back(std::move(path));
    }
    for (auto it = dropped.rbegin(); it != dropped.rend(); ++it) restore(*it);
    return paths;
  }

  void record_if_better(int count) {
    if (count < best_count) {
      best_count = count;
      best_paths = current;
      if (best_count <= global_lb) finished = true;
    }
  }

  void search_closed(int used) {
    if (!tick()) return;
    if (alive_count == 0) {
      record_if_better(used);
      return;
    }
    if (used + lower_bound() >= best_count) return;
    if (use_memo) {
      auto [it, inserted] = seen_at.try_emplace(mask, used);
      if (!inserted) {
        if (it->second <= used) return;
        it->second = used;
      }
    }

    int start = -1;
    for (int v = 0; v < n; ++v)
      if (ex_of(v) > 0 && out_deg[v] > 0) {
        start = v;
        break;
      }
    if (start != -1) {
      // Some path must start here in every decomposition of the residual.
      open_from(start, used);
      return;
    }
    // Balanced residual: any non-isolated vertex may host the next start.
    for (int v = 0; v < n && !finished && !aborted; ++v)
      if (out_deg[v] > 0) open_from(v, used);
  }

  void open_from(int v, int used) {
    std::vector<char> on_path(n, 0);
    on_path[v] = 1;
    current.emplace_back(1, v);
    for (int id : out_edge_ids[v]) {
      if (finished || aborted) break;
      if (!alive[id]) continue;
      drop(id);
      on_path[edge_list[id].to] = 1;
      current.back().push_back(edge_list[id].to);
      search_open(edge_list[id].to, used, on_path);
      current.back().pop_back();
      on_path[edge_list[id].to] = 0;
      restore(id);
    }
    current.pop_back();
  }

  void search_open(int tip, int used, std::vector<char>& on_path) {
    if (!tick()) return;
    // The continuation plus new paths partition the residual into at least
    // max(ex, ceil(m/(n-1)), 1) paths, one of which is the open path.
    if (used + lower_bound() >= best_count) return;
    // Extend first (greedy), then close.
    for (int id : out_edge_ids[tip]) {
      if (finished || aborted) break;
      if (!alive[id]) continue;
      int w = edge_list[id].to;
      if (on_path[w]) continue;
      drop(id);
      on_path[w] = 1;
      current.back().push_back(w);
      search_open(w, used, on_path);
      current.back().pop_back();
      on_path[w] = 0;
      restore(id);
    }
    if (finished || aborted) return;
    search_closed(used + 1);
  }

  void run() {
    best_paths = greedy_paths();
    best_count = static_cast<int>(best_paths.size());
    global_lb = lower_bound();
    if (best_count > global_lb && alive_count > 0) search_closed(0);
  }
};

}  // namespace

ExactResult path_number_exact(const Digraph& d, SolveBudget budget) {
  ExactResult result;
  if (d.edge_count() == 0) {
    result.path_number = 0;
    result.witness.kind = DecompositionKind::perfect;
    return result;
  }

  Solver solver(d, budget.max_nodes);
  solver.run();

  result.path_number = solver.best_count;
  result.exact = !solver.aborted;
  result.nodes = solver.nodes;
  for (auto& verts : solver.best_paths)
    result.witness.paths.emplace_back(verts);

  Classification c = classify_decomposition(d, result.witness.paths);
  if (c.kind == DecompositionKind::invalid)
    throw std::logic_error("solver produced an invalid decomposition: " +
                           (c.violations.empty() ? "" : c.violations.front()));
  if (c.edges_covered != d.edge_count())
    throw std::logic_error("solver decomposition does not cover all edges");
  result.witness.kind = c.kind;

  if (result.exact && result.path_number < total_excess(d))
    throw std::logic_error("path number fell below the excess lower bound");
  return result;
}

QuarterBoundCheck pn_upper_quarter_check(const Digraph& tournament,
                                         SolveBudget budget) {
  if (!tournament.is_tournament())
    throw std::invalid_argument("quarter bound check requires a tournament");
  ExactResult r = path_number_exact(tournament, budget);
  QuarterBoundCheck check;
  check.pn_or_bound = r.path_number;
  check.exact = r.exact;
  long long n = tournament.vertex_count();
  check.holds = 4LL * r.path_number <= n * n;
  return check;
}

}  // namespace pathdec
