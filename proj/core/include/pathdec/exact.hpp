#pragma once

#include <cstdint>

#include "pathdec/decomposition.hpp"
#include "pathdec/digraph.hpp"

namespace pathdec {

struct SolveBudget {
  long long max_nodes = -1;  // -1 = unlimited

  static SolveBudget unlimited() { return {}; }
  // Deterministic stand-in for a wall-clock budget: the solver counts search
  // nodes, so identical inputs give identical results regardless of load.
  static SolveBudget from_millis(long long ms);
};

struct ExactResult {
  int path_number = 0;
  bool exact = true;  // false when the node budget ran out
  PathDecomposition witness;
  long long nodes = 0;
};

// Minimum path decomposition by branch and bound. Branches start at the
// lowest-indexed vertex with positive residual excess (over all first edges),
// extending the open path greedily with ties by neighbor index; prunes with
// max(ex(residual), ceil(m/(n-1))) and a residual-state dominance table for
// small edge counts. On budget exhaustion the best decomposition found so
// far is returned with exact = false.
ExactResult path_number_exact(const Digraph& d, SolveBudget budget = {});

struct QuarterBoundCheck {
  int pn_or_bound = 0;
  bool exact = true;
  bool holds = false;  // pn <= n^2 / 4
};

// Checks pn(T) <= n^2/4 for a tournament (throws if D is not a tournament).
QuarterBoundCheck pn_upper_quarter_check(const Digraph& tournament,
                                         SolveBudget budget = {});

}  // namespace pathdec
