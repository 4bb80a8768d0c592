#include "pathdec/decomposition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace pathdec {

std::string to_string(DecompositionKind kind) {
  switch (kind) {
    case DecompositionKind::invalid: return "invalid";
    case DecompositionKind::general: return "general";
    case DecompositionKind::partial: return "partial";
    case DecompositionKind::perfect: return "perfect";
  }
  return "invalid";
}

int PathDecomposition::size() const {
  int count = 0;
  for (const Path& p : paths)
    if (!p.degenerate()) ++count;
  return count;
}

Classification classify_decomposition(const Digraph& host,
                                      const std::vector<Path>& paths) {
  Classification result;
  const int n = host.vertex_count();

  std::string why;
  for (size_t i = 0; i < paths.size(); ++i) {
    if (!paths[i].validate_against(host, &why))
      result.violations.push_back("path " + std::to_string(i) + " (" +
                                  paths[i].to_string() + "): " + why);
  }

  std::set<Edge> used;
  for (const Path& p : paths) {
    for (const Edge& e : p.edges()) {
      if (!used.insert(e).second)
        result.violations.push_back("edge " + std::to_string(e.from) + "->" +
                                    std::to_string(e.to) +
                                    " used by more than one path");
    }
  }

  if (!result.violations.empty()) {
    result.kind = DecompositionKind::invalid;
    return result;
  }

  result.edges_covered = static_cast<int>(used.size());

  std::vector<char> touched(n, 0);
  std::vector<int> starts(n, 0), ends(n, 0);
  for (const Path& p : paths) {
    for (Vertex v : p.vertices()) touched[v] = 1;
    if (p.degenerate()) continue;
    ++result.nondegenerate_paths;
    ++starts[p.source()];
    ++ends[p.target()];
  }
  result.covers_vertices =
      std::all_of(touched.begin(), touched.end(), [](char c) { return c; });

  ExcessProfile prof = excess_profile(host);
  std::vector<std::string> partial_violations;
  for (Vertex v = 0; v < n; ++v) {
    if (starts[v] > prof.ex_plus(v))
      partial_violations.push_back(
          "vertex " + std::to_string(v) + ": " + std::to_string(starts[v]) +
          " paths start but ex+ = " + std::to_string(prof.ex_plus(v)));
    if (ends[v] > prof.ex_minus(v))
      partial_violations.push_back(
          "vertex " + std::to_string(v) + ": " + std::to_string(ends[v]) +
          " paths end but ex- = " + std::to_string(prof.ex_minus(v)));
  }

  if (!partial_violations.empty()) {
    result.kind = DecompositionKind::general;
    result.violations = std::move(partial_violations);
    return result;
  }

  if (result.edges_covered == host.edge_count() &&
      result.nondegenerate_paths == prof.total) {
    result.kind = DecompositionKind::perfect;
  } else {
    result.kind = DecompositionKind::partial;
    if (result.edges_covered != host.edge_count())
      result.violations.push_back(
          "covers " + std::to_string(result.edges_covered) + " of " +
          std::to_string(host.edge_count()) + " edges");
    if (result.nondegenerate_paths != prof.total)
      result.violations.push_back(
          std::to_string(result.nondegenerate_paths) + " paths != ex(D) = " +
          std::to_string(prof.total));
  }
  return result;
}

Digraph union_digraph(int n, const std::vector<Path>& paths) {
  Digraph h(n);
  for (const Path& p : paths)
    for (const Edge& e : p.edges()) h.add_edge(e.from, e.to);
  return h;
}

bool excess_dominated(const Digraph& h, const Digraph& d) {
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    int eh = excess(h, v);
    int ed = excess(d, v);
    if (std::max(eh, 0) > std::max(ed, 0)) return false;
    if (std::max(-eh, 0) > std::max(-ed, 0)) return false;
  }
  return true;
}

Digraph remove_decomposition(const Digraph& d, const std::vector<Path>& paths) {
  Digraph h = union_digraph(d.vertex_count(), paths);
  std::vector<Edge> removed = h.edges();
  Digraph rest = d.minus_edges(removed);
  if (excess_dominated(h, d)) {
    if (total_excess(d) != total_excess(h) + total_excess(rest))
      throw std::logic_error("excess additivity violated for a dominated removal");
  }
  return rest;
}

std::string decomposition_json(const Digraph& host,
                               const std::vector<Path>& paths) {
  Classification c = classify_decomposition(host, paths);
  nlohmann::ordered_json j;
  j["n"] = host.vertex_count();
  j["m"] = host.edge_count();
  j["excess"] = total_excess(host);
  j["paths"] = nlohmann::ordered_json::array();
  for (const Path& p : paths) j["paths"].push_back(p.vertices());
  j["kind"] = to_string(c.kind);
  j["valid"] = c.kind != DecompositionKind::invalid;
  return j.dump(2) + "\n";
}

std::vector<Path> paths_from_json(const std::string& json_text) {
  auto j = nlohmann::json::parse(json_text);
  std::vector<Path> paths;
  for (const auto& seq : j.at("paths"))
    paths.emplace_back(seq.get<std::vector<Vertex>>());
  return paths;
}

}  // namespace pathdec
