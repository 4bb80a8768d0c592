#include "pathdec/menger.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "flow_network.hpp"

namespace pathdec {

namespace {

constexpr long long kUncapped = 1LL << 40;

std::vector<char> membership(const Digraph& d, const std::vector<Vertex>& vs) {
  std::vector<char> in(d.vertex_count(), 0);
  for (Vertex v : vs) {
    d.check_vertex(v);
    in[v] = 1;
  }
  return in;
}

}  // namespace

SeparatorResult min_vertex_separator(const Digraph& d,
                                     const std::vector<Vertex>& a,
                                     const std::vector<Vertex>& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("A and B must be nonempty");

  std::vector<char> in_a = membership(d, a);
  std::vector<char> in_b = membership(d, b);

  SeparatorResult result;
  std::vector<Vertex> forced;
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    if (in_a[v] && in_b[v]) forced.push_back(v);
  Digraph work = forced.empty() ? d : d.minus_vertices(forced);
  for (Vertex v : forced) {
    in_a[v] = in_b[v] = 0;
    result.vertices.push_back(v);
  }

  const int n = d.vertex_count();
  // u_in = u, u_out = n + u.
  detail::FlowNetwork net(2 * n + 2);
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  for (Vertex u = 0; u < n; ++u)
    net.add_edge(u, n + u, (in_a[u] || in_b[u]) ? kUncapped : 1);
  for (Vertex u = 0; u < n; ++u) {
    if (in_a[u]) net.add_edge(source, u, kUncapped);
    if (in_b[u]) net.add_edge(n + u, sink, kUncapped);
  }
  struct EdgeArc {
    Edge e;
    int id;
  };
  std::vector<EdgeArc> edge_arcs;
  for (const Edge& e : work.edges())
    edge_arcs.push_back({e, net.add_edge(n + e.from, e.to, 1)});

  long long flow = net.max_flow(source, sink);

  std::set<Vertex> cut_vertices;
  std::set<Edge> cut_direct;
  std::vector<char> reach = net.residual_reachable(source);
  for (Vertex u = 0; u < n; ++u)
    if (!in_a[u] && !in_b[u] && reach[u] && !reach[n + u])
      cut_vertices.insert(u);
  for (const EdgeArc& ea : edge_arcs) {
    if (reach[n + ea.e.from] && !reach[ea.e.to]) {
      if (in_a[ea.e.from] && in_b[ea.e.to])
        cut_direct.insert(ea.e);
      else if (!in_a[ea.e.from])
        cut_vertices.insert(ea.e.from);
      else
        cut_vertices.insert(ea.e.to);
    }
  }

  result.vertices.insert(result.vertices.end(), cut_vertices.begin(),
                         cut_vertices.end());
  result.direct_edges.assign(cut_direct.begin(), cut_direct.end());
  result.size = static_cast<int>(forced.size() + flow);
  return result;
}

FanResult disjoint_path_fan(const Digraph& d, const std::vector<Vertex>& a,
                            Vertex v, int want, int max_len,
                            bool distinct_sources) {
  d.check_vertex(v);
  if (want < 0) throw std::invalid_argument("want must be non-negative");
  std::vector<char> in_a = membership(d, a);

  FanResult result;
  result.fan.target = v;
  result.requested = want;

  if (in_a[v]) {
    // The target counts as vertex-disjoint with itself.
    result.target_in_sources = true;
    result.fan.paths.push_back(Path({v}));
    result.max_fan_size = want;
    result.within_cap = static_cast<int>(result.fan.paths.size());
    return result;
  }

  const int n = d.vertex_count();
  detail::FlowNetwork net(2 * n + 1);
  const int source = 2 * n;
  const int sink = v;  // v_in
  for (Vertex u = 0; u < n; ++u) {
    if (u == v) continue;
    long long cap = in_a[u] ? (distinct_sources ? 1 : kUncapped) : 1;
    net.add_edge(u, n + u, cap);
  }
  for (Vertex u = 0; u < n; ++u)
    if (in_a[u]) net.add_edge(source, u, kUncapped);
  for (const Edge& e : d.edges()) {
    if (e.from == v) continue;  // the target never occurs internally
    net.add_edge(n + e.from, e.to, 1);
  }

  result.max_fan_size = static_cast<int>(net.max_flow(source, sink));

  // Loop-erased walk extraction: every positive-flow arc out of the source
  // starts one fan path; cycles in the flow are cancelled on the fly.
  std::vector<std::vector<std::pair<int, int>>> next;  // node -> (to, arc idx)
  std::vector<long long> units;
  next.resize(2 * n + 1);
  {
    int id = 0;
    auto record = [&](int from, int to) {
      long long f = net.flow_on(id);
      if (f > 0) {
        next[from].push_back({to, static_cast<int>(units.size())});
        units.push_back(f);
      }
      ++id;
    };
    for (Vertex u = 0; u < n; ++u)
      if (u != v) record(u, n + u);
    for (Vertex u = 0; u < n; ++u)
      if (in_a[u]) record(source, u);
    for (const Edge& e : d.edges())
      if (e.from != v) record(n + e.from, e.to);
  }

  std::vector<Path> extracted;
  for (int unit = 0; unit < result.max_fan_size; ++unit) {
    std::vector<int> walk_nodes{source};
    std::vector<int> walk_arcs;
    std::vector<int> pos(2 * n + 1, -1);
    pos[source] = 0;
    int cur = source;
    while (cur != sink) {
      int chosen = -1, to = -1;
      for (auto& [t, idx] : next[cur]) {
        if (units[idx] > 0) {
          chosen = idx;
          to = t;
          break;
        }
      }
      if (chosen == -1) throw std::logic_error("flow decomposition stuck");
      --units[chosen];
      if (pos[to] != -1) {
        // Cancel the loop: arcs since the previous visit already decremented.
        for (size_t i = pos[to]; i + 1 < walk_nodes.size(); ++i)
          pos[walk_nodes[i + 1]] = -1;
        walk_arcs.resize(pos[to]);
        walk_nodes.resize(pos[to] + 1);
        cur = to;
        continue;
      }
      walk_arcs.push_back(chosen);
      walk_nodes.push_back(to);
      pos[to] = static_cast<int>(walk_nodes.size()) - 1;
      cur = to;
    }
    // Node sequence source, a_in, a_out, w_in, w_out, ..., v_in.
    std::vector<Vertex> verts;
    for (size_t i = 1; i < walk_nodes.size(); ++i) {
      int node = walk_nodes[i];
      if (node < n) verts.push_back(node);
    }
    // Keep the suffix from the last source-set vertex: a path that passes
    // through A is reported from its last A vertex onward.
    if (!distinct_sources) {
      for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
        if (in_a[verts[i]]) {
          verts.erase(verts.begin(), verts.begin() + i);
          break;
        }
      }
    }
    extracted.push_back(Path(std::move(verts)));
  }

  std::sort(extracted.begin(), extracted.end(), [](const Path& x, const Path& y) {
    if (x.length() != y.length()) return x.length() < y.length();
    return x.vertices() < y.vertices();
  });
  if (static_cast<int>(extracted.size()) > want) extracted.resize(want);
  for (const Path& p : extracted)
    if (p.length() <= max_len) ++result.within_cap;
  result.fan.paths = std::move(extracted);
  return result;
}

}  // namespace pathdec
