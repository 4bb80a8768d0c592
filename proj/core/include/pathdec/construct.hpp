#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pathdec/decomposition.hpp"
#include "pathdec/digraph.hpp"
#include "pathdec/path.hpp"

namespace pathdec {

// Thrown when an operation requiring an acyclic input receives a cyclic one;
// carries a witness cycle.
class CyclicInputError : public std::runtime_error {
 public:
  CyclicInputError(std::string what, Cycle witness)
      : std::runtime_error(std::move(what)), witness_(std::move(witness)) {}
  const Cycle& witness() const { return witness_; }

 private:
  Cycle witness_;
};

// Perfect decomposition of an acyclic digraph by iteratively removing a
// maximum-length path. Exactly ex(D) paths; each removal lowers the excess
// by one (asserted).
PathDecomposition acyclic_perfect_decomposition(const Digraph& d);

// Splits D into a maximal Eulerian part (a union of edge-disjoint cycles)
// and an acyclic rest. Cycles are extracted by DFS from the lowest-indexed
// vertex, first back edge closing each cycle.
std::pair<Digraph, Digraph> split_eulerian(const Digraph& d);

// Floor of the cycle-length lower bound for an Eulerian digraph with n
// vertices and m edges: 1 + max(m^2/24n^3, floor(sqrt(m/n))), evaluated
// with exact integer arithmetic. A cycle of integer length L meets the
// bound iff L >= ceil of the real value; see meets_cycle_length_bound.
bool meets_cycle_length_bound(int cycle_length, int n, long long m);

enum class LongCycleMode { exact, heuristic };

struct LongCycleResult {
  Cycle cycle;
  bool meets_bound = false;
  bool exact = false;  // true when produced by exhaustive search
};

// A long cycle of a nonempty Eulerian digraph. Exact mode finds a
// maximum-length cycle by DFS (practical to n ~ 20); heuristic mode runs a
// deterministic greedy walk and falls back to exact search whenever the
// greedy cycle misses the Eulerian cycle-length bound.
LongCycleResult long_cycle(const Digraph& d, LongCycleMode mode);

// Decomposes an Eulerian digraph into cycles by repeatedly removing a long
// cycle (heuristic with exact fallback, so every removal meets the length
// bound). The count is asserted <= min(m/3, 50 n^{4/3} ln n) for oriented
// inputs.
std::vector<Cycle> greedy_cycle_decomposition(const Digraph& d);

struct CycleWithReps {
  Cycle cycle;
  std::vector<Vertex> reps;  // in cycle order
};

struct RepresentativeResult {
  bool ok = false;
  std::vector<CycleWithReps> cycles;
  // On failure: the Hall witness, as indices into the short-cycle list.
  std::vector<int> infeasible_cycles;
  std::string detail;
};

// Representatives for a cycle family: cycles longer than `interval_cap` are
// divided into intervals of length in [cap/4, cap/2] with one representative
// each; short cycles get two representatives through a capacitated matching.
// No vertex is used more often than multiplicity_cap[v].
RepresentativeResult assign_representatives(
    const std::vector<Cycle>& cycles, int interval_cap,
    const std::vector<int>& multiplicity_cap);

}  // namespace pathdec
