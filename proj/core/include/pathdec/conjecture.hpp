#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathdec/digraph.hpp"
#include "pathdec/exact.hpp"

namespace pathdec {

struct VerifyOptions {
  bool iso = false;                 // exhaustive up to isomorphism
  std::optional<int> samples;       // sample mode instead of exhaustive
  uint64_t seed = 0;                // sample mode
  SolveBudget budget;               // per instance
};

struct ConjectureViolation {
  std::string edges;  // verbatim edge-list text of the tournament
  long long excess = 0;
  int path_number = 0;
};

struct ConjectureReport {
  int n = 0;
  std::string mode;  // "all", "all-iso", "sample"
  uint64_t seed = 0;
  long long instances = 0;
  long long consistent = 0;
  std::vector<ConjectureViolation> violations;
  int max_pn_minus_ex = 0;
  bool all_exact = true;  // false if any solve hit its budget
  long long elapsed_ms = 0;

  bool all_consistent() const { return violations.empty() && all_exact; }
  std::string to_json() const;
};

// Computes ex(T) and exact pn(T) for every even tournament in scope and
// records whether they agree. Each witness decomposition is re-validated
// before it counts. A violation is a first-class result, reported verbatim.
ConjectureReport verify_conjecture(int n, const VerifyOptions& options = {});

}  // namespace pathdec
