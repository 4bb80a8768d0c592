#pragma once

#include <string>
#include <vector>

#include "pathdec/digraph.hpp"
#include "pathdec/excess.hpp"
#include "pathdec/path.hpp"

namespace pathdec {

enum class DecompositionKind { invalid, general, partial, perfect };

std::string to_string(DecompositionKind kind);

// Classifier verdict for a set of paths against a host digraph.
//
// Grading: invalid < general < partial < perfect. Degenerate single-vertex
// paths are tolerated anywhere; they consume no edges and do not count as
// starting or ending at their vertex, nor toward the perfect path count.
// Vertex coverage is reported separately and never required.
struct Classification {
  DecompositionKind kind = DecompositionKind::invalid;
  std::vector<std::string> violations;
  bool covers_vertices = false;
  int edges_covered = 0;
  int nondegenerate_paths = 0;

  bool at_least(DecompositionKind k) const {
    return static_cast<int>(kind) >= static_cast<int>(k);
  }
};

Classification classify_decomposition(const Digraph& host,
                                      const std::vector<Path>& paths);

struct PathDecomposition {
  std::vector<Path> paths;
  DecompositionKind kind = DecompositionKind::general;

  int size() const;  // non-degenerate paths
};

// The digraph formed by the union of the paths' edges on `n` vertices.
// Throws if the paths are not pairwise edge-disjoint.
Digraph union_digraph(int n, const std::vector<Path>& paths);

// D minus the edges of the paths; throws naming any absent edge. When the
// removed subgraph H satisfies ex*_H(v) <= ex*_D(v) for all v componentwise,
// the excess additivity ex(D) = ex(H) + ex(D-H) is asserted.
Digraph remove_decomposition(const Digraph& d, const std::vector<Path>& paths);

// True iff ex*_H(v) <= ex*_D(v) for all v and both signs.
bool excess_dominated(const Digraph& h, const Digraph& d);

// Decomposition JSON: {"n", "m", "excess", "paths", "kind", "valid"}.
std::string decomposition_json(const Digraph& host,
                               const std::vector<Path>& paths);
std::vector<Path> paths_from_json(const std::string& json_text);

}  // namespace pathdec
