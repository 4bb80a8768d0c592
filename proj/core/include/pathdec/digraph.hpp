#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace pathdec {

using Vertex = int;

struct Edge {
  Vertex from = 0;
  Vertex to = 0;
  auto operator<=>(const Edge&) const = default;
};

// Loop-free directed graph on vertices 0..n-1. Out-adjacency is the
// authoritative store (sorted, duplicate-free); the in-adjacency index is
// derived and rebuilt lazily after mutation. Instances are immutable once
// built by a factory and safe to share across threads.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  static Digraph from_edges(int n, std::span<const Edge> edges);

  int vertex_count() const { return static_cast<int>(out_adj_.size()); }
  int edge_count() const { return edge_count_; }

  // Rejects loops and duplicates with std::invalid_argument.
  void add_edge(Vertex u, Vertex v);
  // Returns false if the edge was not present.
  bool remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  const std::vector<Vertex>& out_neighbors(Vertex v) const;
  const std::vector<Vertex>& in_neighbors(Vertex v) const;
  int out_degree(Vertex v) const;
  int in_degree(Vertex v) const;
  int degree(Vertex v) const { return out_degree(v) + in_degree(v); }

  // All edges, sorted by (from, to).
  std::vector<Edge> edges() const;

  // At most one of uv, vu present for every pair.
  bool is_oriented() const;
  // Oriented and exactly one of uv, vu present for every pair.
  bool is_tournament() const;
  // Every vertex balanced: d+(v) == d-(v).
  bool is_eulerian() const;
  bool is_acyclic() const;

  // A topological order if acyclic, otherwise empty.
  std::vector<Vertex> topological_order() const;
  // Vertices of some cycle, in cycle order; empty if acyclic.
  std::vector<Vertex> find_cycle() const;

  // Copy with the given edges removed; throws naming the first missing edge.
  Digraph minus_edges(std::span<const Edge> edges) const;
  // Copy with all edges incident to the given vertices removed.
  Digraph minus_vertices(std::span<const Vertex> removed) const;
  // Copy keeping only edges with both endpoints in `keep` (vertex ids are
  // preserved; everything else becomes isolated). This is D[R].
  Digraph induced(std::span<const Vertex> keep) const;
  Digraph reversed() const;

  bool operator==(const Digraph& other) const;

  // Text format: "n m" header, then one "u v" line per edge, 0-indexed,
  // single space, LF. Lines starting with '#' are ignored on read.
  static Digraph read(std::istream& in);
  static Digraph read_file(const std::string& path);
  void write(std::ostream& out) const;
  void write_file(const std::string& path) const;
  std::string to_text() const;
  static Digraph from_text(const std::string& text);

  void check_vertex(Vertex v) const;

 private:
  void ensure_in_index() const;

  std::vector<std::vector<Vertex>> out_adj_;
  mutable std::vector<std::vector<Vertex>> in_adj_;
  mutable bool in_index_stale_ = false;
  int edge_count_ = 0;
};

}  // namespace pathdec
