#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace pathdec {

// Bipartite graph on parts A (size a_size) and B (size b_size); edges are
// (a, b) index pairs, duplicate-free.
struct BipartiteGraph {
  int a_size = 0;
  int b_size = 0;
  std::vector<std::pair<int, int>> edges;

  static BipartiteGraph make(int a_size, int b_size,
                             std::vector<std::pair<int, int>> edges);

  std::vector<std::vector<int>> a_adjacency() const;

  // Degree over both sides combined (min over all vertices of A u B).
  int min_degree() const;

  // Text format: "A B m" header, then one "a b" line per edge.
  static BipartiteGraph read(std::istream& in);
  void write(std::ostream& out) const;
};

// Result of the defect-k matching: every a matched, every b loaded at most
// k times; on failure a witness X subset of A with k|N(X)| < |X|.
struct KMatchingResult {
  bool ok = false;
  std::vector<int> assignment;  // a -> b, -1 where unassigned
  std::vector<int> witness;     // sorted members of X on failure
};

KMatchingResult hall_k_matching(const BipartiteGraph& g, int k);

// Per-vertex capacities on B instead of a uniform k.
KMatchingResult hall_capacitated_matching(const BipartiteGraph& g,
                                          const std::vector<int>& b_caps);

// Maximum matching (Hopcroft-Karp). `perfect` iff every vertex on both
// sides is matched; `degree_hypothesis` reports whether both sides have size
// n with minimum degree >= n/2, which guarantees perfection.
struct MatchingResult {
  std::vector<int> a_match;  // a -> b or -1
  std::vector<int> b_match;  // b -> a or -1
  int size = 0;
  bool perfect = false;
  bool degree_hypothesis = false;
  std::vector<int> unmatched_a;
};

MatchingResult perfect_matching(const BipartiteGraph& g);

}  // namespace pathdec
