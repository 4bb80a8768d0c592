// Command-line front end: generate instances, inspect excess, decompose,
// verify the even-tournament conjecture at small n, and run batched
// experiments. Exit codes: 0 ok, 1 bad input, 2 failed or out of budget,
// 3 conjecture counterexample found.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pathdec/absorb.hpp"
#include "pathdec/conjecture.hpp"
#include "pathdec/decomposition.hpp"
#include "pathdec/excess.hpp"
#include "pathdec/exact.hpp"
#include "pathdec/experiment.hpp"
#include "pathdec/generate.hpp"

namespace {

using namespace pathdec;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open '" + out_path + "'");
  out << text;
}

Digraph load_digraph(const std::string& path) {
  if (path == "-") return Digraph::read(std::cin);
  return Digraph::read_file(path);
}

int cmd_gen(const std::string& kind, int n, uint64_t seed, double bias,
            const std::string& out_path) {
  GeneratorSpec spec{generator_kind_from_string(kind), n, seed, bias};
  emit(generate(spec).to_text(), out_path);
  return 0;
}

int cmd_excess(const std::string& input, const std::string& format,
               const std::string& out_path) {
  Digraph d = load_digraph(input);
  ExcessProfile p = excess_profile(d);
  if (format == "text") {
    std::ostringstream out;
    out << "n " << d.vertex_count() << " m " << d.edge_count() << " ex "
        << p.total << '\n';
    for (Vertex v = 0; v < d.vertex_count(); ++v)
      out << v << ' ' << p.per_vertex[v] << '\n';
    emit(out.str(), out_path);
    return 0;
  }
  nlohmann::ordered_json j;
  j["n"] = d.vertex_count();
  j["m"] = d.edge_count();
  j["excess"] = p.total;
  j["per_vertex"] = p.per_vertex;
  j["u_plus"] = p.u_plus;
  j["u_minus"] = p.u_minus;
  j["u_zero"] = p.u_zero;
  emit(j.dump(2) + "\n", out_path);
  return 0;
}

int cmd_decompose(const std::string& input, const std::string& method,
                  long long budget_ms, std::optional<int> ell,
                  std::optional<int> max_len, std::optional<int> threshold,
                  const std::string& out_path, const std::string& trace_path) {
  Digraph d = load_digraph(input);
  SolveMethod m = solve_method_from_string(method);

  auto params_for = [&]() {
    AbsorptionParams p = AbsorptionParams::suggest(d);
    if (ell) p.ell = *ell;
    if (max_len) p.m = *max_len;
    if (threshold) p.s = *threshold;
    return p;
  };

  if (m == SolveMethod::construct || m == SolveMethod::auto_fallback) {
    AbsorbResult r = absorb_and_decompose(d, params_for());
    if (!trace_path.empty()) emit(r.trace.to_json(), trace_path);
    if (r.ok) {
      emit(decomposition_json(d, r.decomposition.paths), out_path);
      return 0;
    }
    if (m == SolveMethod::construct) {
      std::cerr << "construction failed at stage '" << r.failure.stage
                << "': " << r.failure.detail << '\n';
      return 2;
    }
  }

  ExactResult r = path_number_exact(d, SolveBudget::from_millis(budget_ms));
  emit(decomposition_json(d, r.witness.paths), out_path);
  if (!r.exact && r.path_number != total_excess(d)) {
    std::cerr << "node budget exhausted; result is an upper bound\n";
    return 2;
  }
  return 0;
}

int cmd_verify(int n, bool all, bool iso, std::optional<int> samples,
               uint64_t seed, long long budget_ms, const std::string& out_path) {
  if (!all && !samples.has_value())
    throw CLI::ValidationError("verify", "pass --all or --samples K");
  VerifyOptions options;
  options.iso = iso;
  if (!all) options.samples = samples;
  options.seed = seed;
  options.budget = SolveBudget::from_millis(budget_ms);

  ConjectureReport report = verify_conjecture(n, options);
  emit(report.to_json(), out_path);
  std::cerr << report.consistent << "/" << report.instances
            << " tournaments consistent\n";
  if (!report.violations.empty()) return 3;
  if (!report.all_exact) return 2;
  return 0;
}

int cmd_experiment(const std::string& kind, int n, int instances, uint64_t seed,
                   double bias, const std::string& method, long long budget_ms,
                   std::optional<int> ell, std::optional<int> max_len,
                   std::optional<int> threshold, int threads,
                   const std::string& out_path, const std::string& format) {
  ExperimentSpec spec;
  spec.generator = {generator_kind_from_string(kind), n, seed, bias};
  spec.instances = instances;
  spec.method = solve_method_from_string(method);
  spec.budget_ms = budget_ms;
  spec.threads = threads;
  if (ell || max_len || threshold) {
    // Probe one instance for the suggested baseline, then apply overrides.
    GeneratorSpec probe = spec.generator;
    probe.seed = derive_seed(seed, 0);
    AbsorptionParams p = AbsorptionParams::suggest(generate(probe));
    if (ell) p.ell = *ell;
    if (max_len) p.m = *max_len;
    if (threshold) p.s = *threshold;
    spec.params = p;
  }

  ExperimentReport report = run_experiment(spec);
  if (out_path.empty())
    emit(format == "csv" ? report.to_csv() : report.to_json(), "");
  else
    write_report_file(report, out_path, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"path decompositions of tournaments and oriented graphs"};
  app.require_subcommand(1);

  std::string kind = "random_uniform", input, out_path, trace_path;
  std::string method = "exact", format = "json";
  int n = 4, instances = 1, threads = 0;
  uint64_t seed = 0;
  double bias = 0.75;
  long long budget_ms = -1;
  bool all = false, iso = false;
  std::optional<int> samples, ell, max_len, threshold;

  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--kind", kind,
                  "transitive|near_regular|random_uniform|skewed|acyclic_random");
  gen->add_option("--n", n, "vertex count")->required();
  gen->add_option("--seed", seed, "PRNG seed");
  gen->add_option("--bias", bias, "skew probability in [0.5, 1)");
  gen->add_option("--out", out_path, "output path (default stdout)");

  auto* excess = app.add_subcommand("excess", "excess profile of a digraph");
  excess->add_option("input", input, "edge-list file, or - for stdin")
      ->required();
  excess->add_option("--format", format, "json|text");
  excess->add_option("--out", out_path, "output path");

  auto* decompose = app.add_subcommand("decompose", "minimum path decomposition");
  decompose->add_option("input", input, "edge-list file, or - for stdin")
      ->required();
  decompose->add_option("--method", method, "exact|construct|auto");
  decompose->add_option("--budget-ms", budget_ms, "exact-search budget");
  decompose->add_option("--ell", ell, "absorption fan width");
  decompose->add_option("--max-len", max_len, "absorption path length cap");
  decompose->add_option("--threshold", threshold, "absorption excess threshold");
  decompose->add_option("--out", out_path, "output path");
  decompose->add_option("--trace", trace_path, "pipeline trace output path");

  auto* verify = app.add_subcommand("verify", "check pn == ex on tournaments");
  verify->add_option("--n", n, "tournament size (even)")->required();
  verify->add_flag("--all", all, "exhaustive over labeled tournaments");
  verify->add_flag("--iso", iso, "one tournament per isomorphism class");
  verify->add_option("--samples", samples, "sampled tournaments instead");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--budget-ms", budget_ms, "per-instance budget");
  verify->add_option("--out", out_path, "report path");

  auto* experiment = app.add_subcommand("experiment", "batched runs with a report");
  experiment->add_option("--kind", kind, "generator kind");
  experiment->add_option("--n", n, "instance size")->required();
  experiment->add_option("--samples", instances, "batch size");
  experiment->add_option("--seed", seed, "batch seed");
  experiment->add_option("--bias", bias, "skew probability");
  experiment->add_option("--method", method, "exact|construct|auto");
  experiment->add_option("--budget-ms", budget_ms, "per-instance budget");
  experiment->add_option("--ell", ell, "absorption fan width");
  experiment->add_option("--max-len", max_len, "absorption path length cap");
  experiment->add_option("--threshold", threshold, "absorption excess threshold");
  experiment->add_option("--threads", threads, "worker count (0 = auto)");
  experiment->add_option("--out", out_path, "report path");
  experiment->add_option("--format", format, "json|csv");

  try {
    app.parse(argc, argv);
    if (gen->parsed())
      return cmd_gen(kind, n, seed, bias, out_path);
    if (excess->parsed())
      return cmd_excess(input, format, out_path);
    if (decompose->parsed())
      return cmd_decompose(input, method, budget_ms, ell, max_len, threshold,
                           out_path, trace_path);
    if (verify->parsed())
      return cmd_verify(n, all, iso, samples, seed, budget_ms, out_path);
    if (experiment->parsed())
      return cmd_experiment(kind, n, instances, seed, bias, method, budget_ms,
                            ell, max_len, threshold, threads, out_path, format);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
