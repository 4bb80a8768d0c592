#include "pathdec/conjecture.hpp"

#include <chrono>
#include <stdexcept>

#include "json.hpp"
#include "pathdec/enumerate.hpp"
#include "pathdec/excess.hpp"
#include "pathdec/generate.hpp"

namespace pathdec {

std::string ConjectureReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["mode"] = mode;
  if (mode == "sample") j["seed"] = seed;
  j["instances"] = instances;
  j["consistent"] = consistent;
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : violations) {
    nlohmann::ordered_json row;
    row["edges"] = v.edges;
    row["excess"] = v.excess;
    row["path_number"] = v.path_number;
    j["violations"].push_back(row);
  }
  j["max_pn_minus_ex"] = max_pn_minus_ex;
  j["all_exact"] = all_exact;
  j["elapsed_ms"] = elapsed_ms;
  return j.dump(2) + "\n";
}

ConjectureReport verify_conjecture(int n, const VerifyOptions& options) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("conjecture verification needs even n >= 2");

  ConjectureReport report;
  report.n = n;
  report.seed = options.seed;
  auto t0 = std::chrono::steady_clock::now();

  auto consider = [&](const Digraph& t) {
    ++report.instances;
    long long ex = total_excess(t);
    ExactResult r = path_number_exact(t, options.budget);
    // pn >= ex always, so hitting the upper bound ex is conclusive even if
    // the node budget ran out.
    bool conclusive = r.exact || r.path_number == ex;
    if (!conclusive) {
      report.all_exact = false;
      return;
    }

    Classification c = classify_decomposition(t, r.witness.paths);
    bool witness_ok = c.kind != DecompositionKind::invalid &&
                      c.edges_covered == t.edge_count();
    if (!witness_ok) throw std::logic_error("solver witness failed validation");
    if (r.path_number == ex && c.kind != DecompositionKind::perfect)
      throw std::logic_error("pn == ex but witness not classified perfect");

    report.max_pn_minus_ex =
        std::max(report.max_pn_minus_ex, static_cast<int>(r.path_number - ex));
    if (r.path_number == ex) {
      ++report.consistent;
    } else {
      report.violations.push_back({t.to_text(), ex, r.path_number});
    }
  };

  if (options.samples.has_value()) {
    report.mode = "sample";
    for (int i = 0; i < *options.samples; ++i) {
      GeneratorSpec spec{GeneratorKind::random_uniform, n,
                         derive_seed(options.seed, i), 0.5};
      consider(generate(spec));
    }
  } else {
    report.mode = options.iso ? "all-iso" : "all";
    enumerate_tournaments(n, options.iso, consider);
  }

  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  return report;
}

}  // namespace pathdec
