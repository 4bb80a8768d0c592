#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <regex>

#include "pathdec/excess.hpp"
#include "pathdec/experiment.hpp"
#include "pathdec/generate.hpp"

using namespace pathdec;

namespace {

std::string mask_timing(std::string text) {
  static const std::regex ms_field("\"([a-z_]*elapsed_ms)\": [0-9]+");
  return std::regex_replace(text, ms_field, "\"$1\": 0");
}

}  // namespace

TEST_CASE("transitive and near-regular generators hit the excess extremes") {
  Digraph tt = generate({GeneratorKind::transitive, 4, 0, 0.5});
  CHECK(tt.is_tournament());
  CHECK(tt.has_edge(0, 3));
  CHECK(total_excess(tt) == 4);

  for (int n : {4, 6, 8, 10}) {
    Digraph nr = generate({GeneratorKind::near_regular, n, 0, 0.5});
    CHECK(nr.is_tournament());
    CHECK(total_excess(nr) == n / 2);
  }
  for (int n : {3, 5, 7, 9}) {
    Digraph nr = generate({GeneratorKind::near_regular, n, 0, 0.5});
    CHECK(nr.is_tournament());
    for (Vertex v = 0; v < n; ++v) CHECK(excess(nr, v) == 0);
  }
}

TEST_CASE("random generators are tournaments and reproducible bit for bit") {
  for (auto kind : {GeneratorKind::random_uniform, GeneratorKind::skewed}) {
    GeneratorSpec spec{kind, 12, 345, 0.8};
    Digraph a = generate(spec);
    Digraph b = generate(spec);
    CHECK(a == b);
    CHECK(a.is_tournament());
    GeneratorSpec other = spec;
    other.seed = 346;
    CHECK_FALSE(generate(other) == a);
  }
}

TEST_CASE("extreme skew converges to the transitive orientation") {
  GeneratorSpec spec{GeneratorKind::skewed, 4, 1, 0.999999};
  CHECK(generate(spec) == generate({GeneratorKind::transitive, 4, 0, 0.5}));
}

TEST_CASE("skew bias is validated") {
  CHECK_THROWS_AS(generate({GeneratorKind::skewed, 4, 0, 0.4}),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate({GeneratorKind::skewed, 4, 0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate({GeneratorKind::transitive, 0, 0, 0.5}),
                  std::invalid_argument);
}

TEST_CASE("acyclic generator is acyclic") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Digraph d = generate({GeneratorKind::acyclic_random, 10, seed, 0.5});
    CHECK(d.is_acyclic());
    CHECK(d.is_oriented());
  }
}

TEST_CASE("generator kind names round trip") {
  for (auto kind : {GeneratorKind::transitive, GeneratorKind::near_regular,
                    GeneratorKind::random_uniform, GeneratorKind::skewed,
                    GeneratorKind::acyclic_random})
    CHECK(generator_kind_from_string(to_string(kind)) == kind);
  CHECK_THROWS(generator_kind_from_string("zebra"));
}

TEST_CASE("experiment rows are validated and ordered") {
  ExperimentSpec spec;
  spec.generator = {GeneratorKind::random_uniform, 6, 17, 0.5};
  spec.instances = 8;
  spec.method = SolveMethod::exact;
  ExperimentReport report = run_experiment(spec);
  REQUIRE(report.rows.size() == 8);
  for (int i = 0; i < 8; ++i) {
    const InstanceRow& row = report.rows[i];
    CHECK(row.index == i);
    CHECK(row.valid);
    CHECK(row.success);
    CHECK(row.paths == row.excess);  // even tournaments stay consistent
  }
  CHECK(report.successes == 8);
  CHECK(report.consistent == 8);
}

TEST_CASE("empty batch gives an empty report") {
  ExperimentSpec spec;
  spec.instances = 0;
  ExperimentReport report = run_experiment(spec);
  CHECK(report.rows.empty());
  CHECK(report.to_csv().find("index,") == 0);
}

TEST_CASE("experiment reports are deterministic once timing is masked") {
  ExperimentSpec spec;
  spec.generator = {GeneratorKind::skewed, 10, 99, 0.8};
  spec.instances = 6;
  spec.method = SolveMethod::auto_fallback;
  spec.threads = 2;
  std::string a = mask_timing(run_experiment(spec).to_json());
  std::string b = mask_timing(run_experiment(spec).to_json());
  CHECK(a == b);

  spec.threads = 1;  // scheduling must not change the report
  std::string c = mask_timing(run_experiment(spec).to_json());
  CHECK(a == c);
}

TEST_CASE("csv schema is stable") {
  ExperimentSpec spec;
  spec.generator = {GeneratorKind::random_uniform, 4, 5, 0.5};
  spec.instances = 3;
  ExperimentReport report = run_experiment(spec);
  std::string csv = report.to_csv();
  CHECK(csv.rfind("index,seed,n,m,excess,method,paths,success,exact,valid,"
                  "failure_stage,elapsed_ms\n",
                  0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header + 3 rows
}

TEST_CASE("construct experiments never report an invalid row") {
  ExperimentSpec spec;
  spec.generator = {GeneratorKind::skewed, 24, 123, 0.9};
  spec.instances = 6;
  spec.method = SolveMethod::construct;
  ExperimentReport report = run_experiment(spec);
  for (const InstanceRow& row : report.rows) {
    if (row.success) {
      CHECK(row.valid);
      CHECK(row.paths == row.excess);
    } else {
      CHECK_FALSE(row.failure_stage.empty());
    }
  }
}
