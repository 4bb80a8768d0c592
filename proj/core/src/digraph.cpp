#include "pathdec/digraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pathdec {

Digraph::Digraph(int n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  out_adj_.resize(n);
  in_adj_.resize(n);
}

Digraph Digraph::from_edges(int n, std::span<const Edge> edges) {
  Digraph d(n);
  for (const Edge& e : edges) d.add_edge(e.from, e.to);
  d.ensure_in_index();
  return d;
}

void Digraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= vertex_count())
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range [0, " +
                            std::to_string(vertex_count()) + ")");
}

void Digraph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v)
    throw std::invalid_argument("loop " + std::to_string(u) + "->" +
                                std::to_string(v) + " not allowed");
  auto& row = out_adj_[u];
  auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it != row.end() && *it == v)
    throw std::invalid_argument("duplicate edge " + std::to_string(u) + "->" +
                                std::to_string(v));
  row.insert(it, v);
  ++edge_count_;
  in_index_stale_ = true;
}

bool Digraph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  auto& row = out_adj_[u];
  auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it == row.end() || *it != v) return false;
  row.erase(it);
  --edge_count_;
  in_index_stale_ = true;
  return true;
}

bool Digraph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& row = out_adj_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

const std::vector<Vertex>& Digraph::out_neighbors(Vertex v) const {
  check_vertex(v);
  return out_adj_[v];
}

const std::vector<Vertex>& Digraph::in_neighbors(Vertex v) const {
  check_vertex(v);
  ensure_in_index();
  return in_adj_[v];
}

int Digraph::out_degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(out_adj_[v].size());
}

int Digraph::in_degree(Vertex v) const {
  check_vertex(v);
  ensure_in_index();
  return static_cast<int>(in_adj_[v].size());
}

void Digraph::ensure_in_index() const {
  if (!in_index_stale_ && in_adj_.size() == out_adj_.size()) return;
  in_adj_.assign(out_adj_.size(), {});
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : out_adj_[u]) in_adj_[v].push_back(u);
  for (auto& row : in_adj_) std::sort(row.begin(), row.end());
  in_index_stale_ = false;
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : out_adj_[u]) result.push_back({u, v});
  return result;
}

bool Digraph::is_oriented() const {
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : out_adj_[u])
      if (v > u && has_edge(v, u)) return false;
  return true;
}

bool Digraph::is_tournament() const {
  const int n = vertex_count();
  if (edge_count_ != n * (n - 1) / 2) return false;
  return is_oriented();
}

bool Digraph::is_eulerian() const {
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (out_degree(v) != in_degree(v)) return false;
  return true;
}

std::vector<Vertex> Digraph::topological_order() const {
  const int n = vertex_count();
  std::vector<int> indeg(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : out_adj_[u]) ++indeg[v];
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  while (!queue.empty()) {
    Vertex u = queue.back();
    queue.pop_back();
    order.push_back(u);
    for (Vertex v : out_adj_[u])
      if (--indeg[v] == 0) queue.push_back(v);
  }
  if (static_cast<int>(order.size()) != n) return {};
  return order;
}

bool Digraph::is_acyclic() const { return !topological_order().empty() || vertex_count() == 0; }

std::vector<Vertex> Digraph::find_cycle() const {
  const int n = vertex_count();
  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<int> state(n, 0);
  std::vector<Vertex> parent(n, -1);
  for (Vertex root = 0; root < n; ++root) {
    if (state[root] != 0) continue;
    // Iterative DFS; the first back edge closes the cycle.
    std::vector<std::pair<Vertex, size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [u, idx] = stack.back();
      if (idx < out_adj_[u].size()) {
        Vertex w = out_adj_[u][idx++];
        if (state[w] == 1) {
          std::vector<Vertex> cycle{w};
          for (Vertex x = u; x != w; x = parent[x]) cycle.push_back(x);
          std::reverse(cycle.begin() + 1, cycle.end());
          return cycle;
        }
        if (state[w] == 0) {
          state[w] = 1;
          parent[w] = u;
          stack.emplace_back(w, 0);
        }
      } else {
        state[u] = 2;
        stack.pop_back();
      }
    }
  }
  return {};
}

Digraph Digraph::minus_edges(std::span<const Edge> edges) const {
  Digraph result = *this;
  for (const Edge& e : edges) {
    if (!result.remove_edge(e.from, e.to))
      throw std::invalid_argument("edge " + std::to_string(e.from) + "->" +
                                  std::to_string(e.to) + " not present");
  }
  result.ensure_in_index();
  return result;
}

Digraph Digraph::minus_vertices(std::span<const Vertex> removed) const {
  std::vector<char> gone(vertex_count(), 0);
  for (Vertex v : removed) {
    check_vertex(v);
    gone[v] = 1;
  }
  Digraph result(vertex_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    if (gone[u]) continue;
    for (Vertex v : out_adj_[u])
      if (!gone[v]) result.add_edge(u, v);
  }
  result.ensure_in_index();
  return result;
}

Digraph Digraph::induced(std::span<const Vertex> keep) const {
  std::vector<char> kept(vertex_count(), 0);
  for (Vertex v : keep) {
    check_vertex(v);
    kept[v] = 1;
  }
  Digraph result(vertex_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    if (!kept[u]) continue;
    for (Vertex v : out_adj_[u])
      if (kept[v]) result.add_edge(u, v);
  }
  result.ensure_in_index();
  return result;
}

Digraph Digraph::reversed() const {
  Digraph result(vertex_count());
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : out_adj_[u]) result.add_edge(v, u);
  result.ensure_in_index();
  return result;
}

bool Digraph::operator==(const Digraph& other) const {
  return out_adj_ == other.out_adj_;
}

Digraph Digraph::read(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      if (!out.empty() && out[0] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line(line)) throw std::runtime_error("empty digraph input");
  std::istringstream header(line);
  int n = 0, m = 0;
  if (!(header >> n >> m))
    throw std::runtime_error("bad digraph header: expected 'n m'");
  Digraph d(n);
  for (int i = 0; i < m; ++i) {
    if (!next_line(line))
      throw std::runtime_error("expected " + std::to_string(m) +
                               " edges, got " + std::to_string(i));
    std::istringstream row(line);
    Vertex u, v;
    if (!(row >> u >> v))
      throw std::runtime_error("bad edge line: '" + line + "'");
    d.add_edge(u, v);
  }
  d.ensure_in_index();
  return d;
}

void Digraph::write(std::ostream& out) const {
  out << vertex_count() << ' ' << edge_count_ << '\n';
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : out_adj_[u]) out << u << ' ' << v << '\n';
}

Digraph Digraph::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return read(in);
}

void Digraph::write_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write(out);
}

std::string Digraph::to_text() const {
  std::ostringstream out;
  write(out);
  return out.str();
}

Digraph Digraph::from_text(const std::string& text) {
  std::istringstream in(text);
  return read(in);
}

}  // namespace pathdec
