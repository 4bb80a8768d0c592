#pragma once

#include <string>
#include <vector>

#include "pathdec/decomposition.hpp"
#include "pathdec/digraph.hpp"
#include "pathdec/path.hpp"

namespace pathdec {

// Outcome of a checked rewrite step. A failed check on well-formed inputs
// indicates a bug upstream, so callers typically assert ok.
struct CheckResult {
  bool ok = true;
  std::string detail;
  explicit operator bool() const { return ok; }
};

// Any Q subset of a partial decomposition P of D is itself a partial
// decomposition, both of D and of D - E(P \ Q). `subset` holds indices
// into `partial`.
CheckResult subset_partial(const Digraph& d, const std::vector<Path>& partial,
                           const std::vector<int>& subset);

// If P_i runs from x_i to y_i and Q_i runs from x_i to y_{perm[i]}, then Q
// is a partial decomposition of D. |Q| <= |P|; perm maps [0,|Q|) into [0,|P|).
CheckResult reroute_endpoints(const Digraph& d, const std::vector<Path>& partial,
                              const std::vector<Path>& rerouted,
                              const std::vector<int>& perm);

// If D' is an Eulerian subdigraph of D and Q is partial for D - D', then Q
// is partial for D.
CheckResult eulerian_quotient_partial(const Digraph& d, const Digraph& euler_sub,
                                      const std::vector<Path>& paths);

// Vertex partition hypothesis of the extension rules: V = A+ u A- u R with
// E(R, A+) = E(A-, R) = E(D[A+ u A-]) = empty.
struct VertexPartition {
  std::vector<Vertex> a_plus;
  std::vector<Vertex> a_minus;
  std::vector<Vertex> rest;
};

// Extends each path of a partial decomposition of D[R] by at most one edge
// from A+ in front and at most one edge into A- behind, processing paths in
// order against the residual of the previously extended ones. The result is
// a partial decomposition of D restricting back to the input on R.
// Throws std::invalid_argument naming any hypothesis-violating edge.
std::vector<Path> extend_over_partition(const Digraph& d,
                                        const VertexPartition& parts,
                                        const std::vector<Path>& partial_of_r);

// Turns a perfect decomposition of D[R] into a perfect decomposition of D:
// extend over the partition, then decompose the acyclic remainder.
PathDecomposition perfect_from_restriction(const Digraph& d,
                                           const VertexPartition& parts,
                                           const std::vector<Path>& perfect_of_r);

}  // namespace pathdec
