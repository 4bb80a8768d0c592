#pragma once

#include <string>
#include <vector>

#include "pathdec/digraph.hpp"

namespace pathdec {

// A directed path given by its vertex sequence. Vertices are distinct and
// the sequence is non-empty; a single vertex is a legal (degenerate) path.
// Edge existence is checked against a host digraph on demand, not stored.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return verts_; }
  Vertex source() const { return verts_.front(); }
  Vertex target() const { return verts_.back(); }
  // Number of edges.
  int length() const { return static_cast<int>(verts_.size()) - 1; }
  bool degenerate() const { return verts_.size() == 1; }
  bool contains(Vertex v) const;

  std::vector<Edge> edges() const;

  // True iff every consecutive pair is an edge of `host`. On failure and
  // with `why` non-null, describes the first offence.
  bool validate_against(const Digraph& host, std::string* why = nullptr) const;

  // Concatenation at a shared endpoint: this->target() == next.source().
  Path joined_with(const Path& next) const;

  std::string to_string() const;
  bool operator==(const Path&) const = default;

 private:
  std::vector<Vertex> verts_;
};

// A directed cycle given by its vertex sequence; the closing edge
// back to the first vertex is implicit. Length is the number of edges
// (== number of vertices), at least 2 for digraphs, 3 when oriented.
class Cycle {
 public:
  Cycle() = default;
  explicit Cycle(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return verts_; }
  int length() const { return static_cast<int>(verts_.size()); }
  bool contains(Vertex v) const;

  std::vector<Edge> edges() const;
  bool validate_against(const Digraph& host, std::string* why = nullptr) const;

  // The path along the cycle from `from` to `to` (both must lie on it).
  Path arc(Vertex from, Vertex to) const;
  // Rotate so the lowest vertex comes first (canonical orientation-preserving form).
  Cycle rotated_to_min() const;

  std::string to_string() const;
  bool operator==(const Cycle&) const = default;

 private:
  std::vector<Vertex> verts_;
};

}  // namespace pathdec
