#pragma once

#include <vector>

#include "pathdec/digraph.hpp"
#include "pathdec/path.hpp"

namespace pathdec {

// Minimum A,B-separator certificate. Vertices of A n B are forced members.
// A direct edge from A to B cannot be met by an internal vertex, so it
// enters the separator as itself; size = |vertices| + |direct_edges|.
struct SeparatorResult {
  int size = 0;
  std::vector<Vertex> vertices;
  std::vector<Edge> direct_edges;
};

// Internal-vertex Menger convention: sources in A and sinks in B carry no
// capacity of their own, every other vertex has unit capacity, and edges
// have unit capacity (so a direct A->B edge is cuttable only as an edge).
// Computed by max-flow over the split network.
SeparatorResult min_vertex_separator(const Digraph& d,
                                     const std::vector<Vertex>& a,
                                     const std::vector<Vertex>& b);

struct PathFan {
  Vertex target = 0;
  std::vector<Path> paths;
};

struct FanResult {
  PathFan fan;           // the selected paths, shortest first
  int requested = 0;     // `want`
  int max_fan_size = 0;  // size of a maximum fan
  int within_cap = 0;    // selected paths with length <= max_len
  bool target_in_sources = false;

  bool complete() const {
    return target_in_sources ||
           static_cast<int>(fan.paths.size()) >= requested;
  }
};

// Up to `want` paths from A to v, pairwise vertex-disjoint except at v
// (and possibly at shared start vertices in A; pass distinct_sources to
// forbid that too). The `want` shortest paths of a maximum fan are selected,
// ties broken lexicographically; within_cap reports how many of them have
// length <= max_len. If v lies in A the fan degenerates to the single-vertex
// path at v.
FanResult disjoint_path_fan(const Digraph& d, const std::vector<Vertex>& a,
                            Vertex v, int want, int max_len,
                            bool distinct_sources = false);

}  // namespace pathdec
