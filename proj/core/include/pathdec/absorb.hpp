#pragma once

#include <string>
#include <vector>

#include "pathdec/decomposition.hpp"
#include "pathdec/digraph.hpp"
#include "pathdec/partial_ops.hpp"
#include "pathdec/path.hpp"

namespace pathdec {

// Tuning knobs for the absorption construction. The asymptotic choices these
// mirror are hopeless at small n, so they are explicit inputs here; suggest()
// scales them down to something worth trying.
struct AbsorptionParams {
  int ell = 1;        // fan width per vertex
  int m = 2;          // path length cap
  int s = 2;          // excess threshold for the reservoirs W+-_s
  double gamma = 0.0; // informational only

  static AbsorptionParams suggest(const Digraph& t);
};

// Reservoir of short paths: for every vertex v, ell edge-disjoint paths into
// v from W+_s and ell out of v into W-_s, each family vertex-disjoint except
// at v, every path of length <= m, and the union of all of them of maximum
// degree <= s. A vertex inside W+_s (resp. W-_s) absorbs trivially and gets
// degenerate single-vertex in-paths (out-paths).
struct AbsorptionStructure {
  std::vector<std::vector<Path>> in_paths;   // [v][j], j < ell
  std::vector<std::vector<Path>> out_paths;  // [v][j]
  AbsorptionParams params;

  Digraph union_graph(int n) const;
  CheckResult validate(const Digraph& host) const;
};

struct StageRecord {
  std::string stage;
  long long input_edges = 0;
  std::string summary;
  std::vector<std::string> assertions;
  bool ok = true;
};

struct PipelineTrace {
  std::vector<StageRecord> stages;
  std::string to_json() const;
};

struct StageFailure {
  std::string stage;
  std::string detail;
};

struct AbsorptionBuild {
  bool ok = false;
  AbsorptionStructure structure;
  StageFailure failure;
};

// Sweeps the vertices in index order; at each step the vertices whose degree
// in the partial union reached s/4 are frozen out of fan interiors, and the
// two fans for the current vertex are found in the residual by disjoint
// max-flow. Infeasible parameters surface as an honest failure report.
AbsorptionBuild build_absorption_structure(const Digraph& t,
                                           const AbsorptionParams& params);

struct AbsorbResult {
  bool ok = false;
  PathDecomposition decomposition;
  StageFailure failure;
  PipelineTrace trace;
};

// Full constructive pipeline: build the absorption structure, take it out of
// T, split the rest into an Eulerian part and an acyclic part, decompose the
// Eulerian part into represented cycles, splice every cycle interval onto an
// in-path of its representative, close each vertex's in/out families by a
// perfect matching, and decompose the acyclic part greedily. Any stage can
// fail; an invalid decomposition is never returned.
AbsorbResult absorb_and_decompose(const Digraph& t,
                                  const AbsorptionParams& params);

}  // namespace pathdec
