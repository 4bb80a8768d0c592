#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pathdec/absorb.hpp"
#include "pathdec/exact.hpp"
#include "pathdec/generate.hpp"

namespace pathdec {

enum class SolveMethod { exact, construct, auto_fallback };

std::string to_string(SolveMethod method);
SolveMethod solve_method_from_string(const std::string& name);

struct ExperimentSpec {
  GeneratorSpec generator;  // seed is the batch seed; instances fork from it
  int instances = 1;
  SolveMethod method = SolveMethod::exact;
  long long budget_ms = -1;
  std::optional<AbsorptionParams> params;  // construct; defaults to suggest()
  int threads = 0;                         // 0 = hardware concurrency
};

struct InstanceRow {
  int index = 0;
  uint64_t seed = 0;
  int n = 0;
  long long m = 0;
  long long excess = 0;
  std::string method_used;     // "exact" or "construct"
  int paths = 0;               // pn or |decomposition|; bound if inexact
  bool success = false;        // a validated decomposition was produced
  bool exact = false;          // solver proved optimality (exact method)
  bool valid = false;          // classifier accepted the decomposition
  std::string failure_stage;   // construct failures
  long long elapsed_ms = 0;
};

struct ExperimentReport {
  ExperimentSpec spec;
  std::vector<InstanceRow> rows;
  long long successes = 0;
  long long consistent = 0;  // rows with paths == excess
  long long total_elapsed_ms = 0;

  // Deterministic apart from the *_ms fields.
  std::string to_json() const;
  std::string to_csv() const;
};

// Runs the batch on a worker pool. Instance seeds derive from the batch seed
// by index, and rows are ordered by index, so the report does not depend on
// scheduling. Every decomposition is re-validated before a row claims it.
ExperimentReport run_experiment(const ExperimentSpec& spec);

void write_report_file(const ExperimentReport& report, const std::string& path,
                       const std::string& format);

}  // namespace pathdec
