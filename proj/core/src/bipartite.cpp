#include "pathdec/bipartite.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "flow_network.hpp"

namespace pathdec {

BipartiteGraph BipartiteGraph::make(int a_size, int b_size,
                                    std::vector<std::pair<int, int>> edges) {
  if (a_size < 0 || b_size < 0)
    throw std::invalid_argument("part sizes must be non-negative");
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a < 0 || a >= a_size || b < 0 || b >= b_size)
      throw std::invalid_argument("edge (" + std::to_string(a) + ", " +
                                  std::to_string(b) + ") out of range");
    if (!seen.insert({a, b}).second)
      throw std::invalid_argument("duplicate edge (" + std::to_string(a) +
                                  ", " + std::to_string(b) + ")");
  }
  return {a_size, b_size, std::move(edges)};
}

std::vector<std::vector<int>> BipartiteGraph::a_adjacency() const {
  std::vector<std::vector<int>> adj(a_size);
  for (auto [a, b] : edges) adj[a].push_back(b);
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

int BipartiteGraph::min_degree() const {
  std::vector<int> da(a_size, 0), db(b_size, 0);
  for (auto [a, b] : edges) {
    ++da[a];
    ++db[b];
  }
  int result = std::numeric_limits<int>::max();
  for (int d : da) result = std::min(result, d);
  for (int d : db) result = std::min(result, d);
  return (a_size == 0 && b_size == 0) ? 0 : result;
}

BipartiteGraph BipartiteGraph::read(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      if (!out.empty() && out[0] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line(line)) throw std::runtime_error("empty bipartite input");
  std::istringstream header(line);
  int a = 0, b = 0, m = 0;
  if (!(header >> a >> b >> m))
    throw std::runtime_error("bad bipartite header: expected 'A B m'");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    if (!next_line(line)) throw std::runtime_error("missing bipartite edges");
    std::istringstream row(line);
    int u, v;
    if (!(row >> u >> v))
      throw std::runtime_error("bad edge line: '" + line + "'");
    edges.emplace_back(u, v);
  }
  return make(a, b, std::move(edges));
}

void BipartiteGraph::write(std::ostream& out) const {
  out << a_size << ' ' << b_size << ' ' << edges.size() << '\n';
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  for (auto [a, b] : sorted) out << a << ' ' << b << '\n';
}

KMatchingResult hall_capacitated_matching(const BipartiteGraph& g,
                                          const std::vector<int>& b_caps) {
  if (static_cast<int>(b_caps.size()) != g.b_size)
    throw std::invalid_argument("capacity vector size must match B");

  detail::FlowNetwork net(g.a_size + g.b_size + 2);
  const int source = g.a_size + g.b_size;
  const int sink = source + 1;
  for (int a = 0; a < g.a_size; ++a) net.add_edge(source, a, 1);

  // Uncapacitated middle arcs keep the min cut on the outer layers, which is
  // what the witness extraction below relies on.
  const long long inf = g.a_size + 1;
  std::vector<std::vector<std::pair<int, int>>> arc_ids(g.a_size);
  for (auto [a, b] : g.edges)
    arc_ids[a].push_back({b, net.add_edge(a, g.a_size + b, inf)});
  for (int b = 0; b < g.b_size; ++b)
    net.add_edge(g.a_size + b, sink, b_caps[b]);

  KMatchingResult result;
  long long flow = net.max_flow(source, sink);
  if (flow == g.a_size) {
    result.ok = true;
    result.assignment.assign(g.a_size, -1);
    for (int a = 0; a < g.a_size; ++a)
      for (auto [b, id] : arc_ids[a])
        if (net.flow_on(id) > 0) {
          result.assignment[a] = b;
          break;
        }
    return result;
  }

  std::vector<char> reach = net.residual_reachable(source);
  for (int a = 0; a < g.a_size; ++a)
    if (reach[a]) result.witness.push_back(a);
  return result;
}

KMatchingResult hall_k_matching(const BipartiteGraph& g, int k) {
  if (k <= 0) throw std::invalid_argument("k must be positive");
  return hall_capacitated_matching(g, std::vector<int>(g.b_size, k));
}

namespace {

// Hopcroft-Karp.
struct HopcroftKarp {
  const std::vector<std::vector<int>>& adj;
  int a_size, b_size;
  std::vector<int> match_a, match_b, dist;
  static constexpr int kInf = std::numeric_limits<int>::max();

  HopcroftKarp(const std::vector<std::vector<int>>& adjacency, int a, int b)
      : adj(adjacency), a_size(a), b_size(b), match_a(a, -1), match_b(b, -1),
        dist(a) {}

  bool bfs() {
    std::vector<int> queue;
    for (int a = 0; a < a_size; ++a) {
      if (match_a[a] == -1) {
        dist[a] = 0;
        queue.push_back(a);
      } else {
        dist[a] = kInf;
      }
    }
    bool found = false;
    for (size_t i = 0; i < queue.size(); ++i) {
      int a = queue[i];
      for (int b : adj[a]) {
        int a2 = match_b[b];
        if (a2 == -1) {
          found = true;
        } else if (dist[a2] == kInf) {
          dist[a2] = dist[a] + 1;
          queue.push_back(a2);
        }
      }
    }
    return found;
  }

  bool dfs(int a) {
    for (int b : adj[a]) {
      int a2 = match_b[b];
      if (a2 == -1 || (dist[a2] == dist[a] + 1 && dfs(a2))) {
        match_a[a] = b;
        match_b[b] = a;
        return true;
      }
    }
    dist[a] = kInf;
    return false;
  }

  int run() {
    int size = 0;
    while (bfs())
      for (int a = 0; a < a_size; ++a)
        if (match_a[a] == -1 && dfs(a)) ++size;
    return size;
  }
};

}  // namespace

MatchingResult perfect_matching(const BipartiteGraph& g) {
  auto adj = g.a_adjacency();
  HopcroftKarp hk(adj, g.a_size, g.b_size);

  MatchingResult result;
  result.size = hk.run();
  result.a_match = std::move(hk.match_a);
  result.b_match = std::move(hk.match_b);
  result.perfect = (result.size == g.a_size && result.size == g.b_size);
  result.degree_hypothesis =
      g.a_size == g.b_size && 2 * g.min_degree() >= g.a_size && g.a_size > 0;
  for (int a = 0; a < g.a_size; ++a)
    if (result.a_match[a] == -1) result.unmatched_a.push_back(a);
  return result;
}

}  // namespace pathdec
