#include "pathdec/experiment.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "pathdec/excess.hpp"

namespace pathdec {

std::string to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::exact: return "exact";
    case SolveMethod::construct: return "construct";
    case SolveMethod::auto_fallback: return "auto";
  }
  return "unknown";
}

SolveMethod solve_method_from_string(const std::string& name) {
  if (name == "exact") return SolveMethod::exact;
  if (name == "construct") return SolveMethod::construct;
  if (name == "auto") return SolveMethod::auto_fallback;
  throw std::invalid_argument("unknown method '" + name + "'");
}

namespace {

InstanceRow solve_instance(const ExperimentSpec& spec, int index) {
  InstanceRow row;
  row.index = index;
  row.seed = derive_seed(spec.generator.seed, index);

  GeneratorSpec gen = spec.generator;
  gen.seed = row.seed;
  Digraph d = generate(gen);
  row.n = d.vertex_count();
  row.m = d.edge_count();
  row.excess = total_excess(d);

  auto t0 = std::chrono::steady_clock::now();
  SolveBudget budget = SolveBudget::from_millis(spec.budget_ms);

  auto try_construct = [&]() -> bool {
    AbsorptionParams params =
        spec.params.has_value() ? *spec.params : AbsorptionParams::suggest(d);
    AbsorbResult r = absorb_and_decompose(d, params);
    row.method_used = "construct";
    if (!r.ok) {
      row.failure_stage = r.failure.stage;
      return false;
    }
    Classification c = classify_decomposition(d, r.decomposition.paths);
    row.valid = c.kind == DecompositionKind::perfect;
    row.success = row.valid;
    row.paths = r.decomposition.size();
    row.exact = row.valid;  // a perfect decomposition is optimal
    return row.success;
  };

  auto run_exact = [&]() {
    ExactResult r = path_number_exact(d, budget);
    row.method_used = "exact";
    Classification c = classify_decomposition(d, r.witness.paths);
    row.valid = c.kind != DecompositionKind::invalid &&
                c.edges_covered == d.edge_count();
    row.paths = r.path_number;
    row.exact = r.exact || r.path_number == row.excess;
    row.success = row.valid;
  };

  switch (spec.method) {
    case SolveMethod::exact:
      run_exact();
      break;
    case SolveMethod::construct:
      try_construct();
      break;
    case SolveMethod::auto_fallback:
      if (!try_construct()) run_exact();
      break;
  }

  row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return row;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentSpec& spec) {
  ExperimentReport report;
  report.spec = spec;
  report.rows.resize(std::max(0, spec.instances));

  auto t0 = std::chrono::steady_clock::now();
  int workers = spec.threads > 0
                    ? spec.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min(workers, spec.instances));

  std::atomic<int> cursor{0};
  auto drain = [&]() {
    while (true) {
      int i = cursor.fetch_add(1);
      if (i >= spec.instances) break;
      report.rows[i] = solve_instance(spec, i);
    }
  };
  if (workers <= 1) {
    drain();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(drain);
    for (auto& th : pool) th.join();
  }

  for (const InstanceRow& row : report.rows) {
    if (row.success) ++report.successes;
    if (row.success && row.paths == row.excess) ++report.consistent;
  }
  report.total_elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

std::string ExperimentReport::to_json() const {
  nlohmann::ordered_json j;
  j["spec"]["kind"] = pathdec::to_string(spec.generator.kind);
  j["spec"]["n"] = spec.generator.n;
  j["spec"]["seed"] = spec.generator.seed;
  j["spec"]["bias"] = spec.generator.bias;
  j["spec"]["instances"] = spec.instances;
  j["spec"]["method"] = pathdec::to_string(spec.method);
  j["spec"]["budget_ms"] = spec.budget_ms;
  j["rows"] = nlohmann::ordered_json::array();
  for (const InstanceRow& row : rows) {
    nlohmann::ordered_json r;
    r["index"] = row.index;
    r["seed"] = row.seed;
    r["n"] = row.n;
    r["m"] = row.m;
    r["excess"] = row.excess;
    r["method"] = row.method_used;
    r["paths"] = row.paths;
    r["success"] = row.success;
    r["exact"] = row.exact;
    r["valid"] = row.valid;
    if (!row.failure_stage.empty()) r["failure_stage"] = row.failure_stage;
    r["elapsed_ms"] = row.elapsed_ms;
    j["rows"].push_back(r);
  }
  j["aggregates"]["instances"] = static_cast<long long>(rows.size());
  j["aggregates"]["successes"] = successes;
  j["aggregates"]["consistent"] = consistent;
  j["aggregates"]["total_elapsed_ms"] = total_elapsed_ms;
  return j.dump(2) + "\n";
}

std::string ExperimentReport::to_csv() const {
  std::ostringstream out;
  out << "index,seed,n,m,excess,method,paths,success,exact,valid,"
         "failure_stage,elapsed_ms\n";
  for (const InstanceRow& row : rows) {
    out << row.index << ',' << row.seed << ',' << row.n << ',' << row.m << ','
        << row.excess << ',' << row.method_used << ',' << row.paths << ','
        << (row.success ? 1 : 0) << ',' << (row.exact ? 1 : 0) << ','
        << (row.valid ? 1 : 0) << ',' << row.failure_stage << ','
        << row.elapsed_ms << '\n';
  }
  return out.str();
}

void write_report_file(const ExperimentReport& report, const std::string& path,
                       const std::string& format) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  if (format == "json")
    out << report.to_json();
  else if (format == "csv")
    out << report.to_csv();
  else
    throw std::invalid_argument("unknown report format '" + format + "'");
}

}  // namespace pathdec
