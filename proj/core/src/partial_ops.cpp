#include "pathdec/partial_ops.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pathdec/construct.hpp"
#include "pathdec/excess.hpp"

namespace pathdec {

namespace {

CheckResult fail(std::string detail) { return {false, std::move(detail)}; }

std::string first_violation(const Classification& c) {
  return c.violations.empty() ? std::string("unclassified") : c.violations.front();
}

CheckResult require_partial(const Digraph& d, const std::vector<Path>& paths,
                            const std::string& label) {
  Classification c = classify_decomposition(d, paths);
  if (!c.at_least(DecompositionKind::partial))
    return fail(label + " is not a partial decomposition: " + first_violation(c));
  return {};
}

}  // namespace

CheckResult subset_partial(const Digraph& d, const std::vector<Path>& partial,
                           const std::vector<int>& subset) {
  if (auto pre = require_partial(d, partial, "P"); !pre) return pre;

  std::vector<char> in_subset(partial.size(), 0);
  for (int i : subset) {
    if (i < 0 || i >= static_cast<int>(partial.size()))
      return fail("subset index " + std::to_string(i) + " out of range");
    in_subset[i] = 1;
  }
  std::vector<Path> q, complement;
  for (size_t i = 0; i < partial.size(); ++i)
    (in_subset[i] ? q : complement).push_back(partial[i]);

  if (auto check = require_partial(d, q, "Q"); !check) return check;

  Digraph rest = d.minus_edges(union_digraph(d.vertex_count(), complement).edges());
  if (auto check = require_partial(rest, q, "Q against D - E(P\\Q)"); !check)
    return check;
  return {};
}

CheckResult reroute_endpoints(const Digraph& d, const std::vector<Path>& partial,
                              const std::vector<Path>& rerouted,
                              const std::vector<int>& perm) {
  if (auto pre = require_partial(d, partial, "P"); !pre) return pre;
  if (rerouted.size() > partial.size())
    return fail("|Q| = " + std::to_string(rerouted.size()) + " exceeds |P| = " +
                std::to_string(partial.size()));
  if (perm.size() < rerouted.size()) return fail("permutation shorter than Q");

  std::set<int> seen;
  for (size_t i = 0; i < rerouted.size(); ++i) {
    int pi = perm[i];
    if (pi < 0 || pi >= static_cast<int>(partial.size()))
      return fail("permutation entry " + std::to_string(pi) + " out of range");
    if (!seen.insert(pi).second)
      return fail("permutation repeats index " + std::to_string(pi));
    if (rerouted[i].source() != partial[i].source())
      return fail("index " + std::to_string(i) + ": start " +
                  std::to_string(rerouted[i].source()) + " != x_" +
                  std::to_string(i) + " = " +
                  std::to_string(partial[i].source()));
    if (rerouted[i].target() != partial[pi].target())
      return fail("index " + std::to_string(i) + ": end " +
                  std::to_string(rerouted[i].target()) + " != y_" +
                  std::to_string(pi) + " = " +
                  std::to_string(partial[pi].target()));
  }

  return require_partial(d, rerouted, "Q");
}

CheckResult eulerian_quotient_partial(const Digraph& d, const Digraph& euler_sub,
                                      const std::vector<Path>& paths) {
  if (euler_sub.vertex_count() != d.vertex_count())
    return fail("subdigraph has different vertex count");
  for (const Edge& e : euler_sub.edges())
    if (!d.has_edge(e.from, e.to))
      return fail("edge " + std::to_string(e.from) + "->" +
                  std::to_string(e.to) + " not in D");
  for (Vertex v = 0; v < euler_sub.vertex_count(); ++v)
    if (euler_sub.out_degree(v) != euler_sub.in_degree(v))
      return fail("not Eulerian: vertex " + std::to_string(v) + " has d+ = " +
                  std::to_string(euler_sub.out_degree(v)) + ", d- = " +
                  std::to_string(euler_sub.in_degree(v)));

  Digraph quotient = d.minus_edges(euler_sub.edges());
  if (auto check = require_partial(quotient, paths, "Q against D - D'"); !check)
    return check;
  return require_partial(d, paths, "Q against D");
}

std::vector<Path> extend_over_partition(const Digraph& d,
                                        const VertexPartition& parts,
                                        const std::vector<Path>& partial_of_r) {
  const int n = d.vertex_count();
  std::vector<int> role(n, -1);  // 0 = A+, 1 = A-, 2 = R
  auto assign = [&](const std::vector<Vertex>& vs, int r, const char* name) {
    for (Vertex v : vs) {
      d.check_vertex(v);
      if (role[v] != -1)
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " assigned twice in the partition (" +
                                    name + ")");
      role[v] = r;
    }
  };
  assign(parts.a_plus, 0, "A+");
  assign(parts.a_minus, 1, "A-");
  assign(parts.rest, 2, "R");
  for (Vertex v = 0; v < n; ++v)
    if (role[v] == -1)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " missing from the partition");

  for (const Edge& e : d.edges()) {
    bool bad = (role[e.from] == 2 && role[e.to] == 0) ||   // E(R, A+)
               (role[e.from] == 1 && role[e.to] == 2) ||   // E(A-, R)
               (role[e.from] != 2 && role[e.to] != 2);     // E(D[A+ u A-])
    if (bad)
      throw std::invalid_argument("partition hypothesis violated by edge " +
                                  std::to_string(e.from) + "->" +
                                  std::to_string(e.to));
  }

  Digraph d_r = d.induced(parts.rest);
  Classification pre = classify_decomposition(d_r, partial_of_r);
  if (!pre.at_least(DecompositionKind::partial))
    throw std::invalid_argument("input is not a partial decomposition of D[R portion]: " +
                                first_violation(pre));

  Digraph residual = d;
  std::vector<Path> extended;
  extended.reserve(partial_of_r.size());
  for (const Path& p : partial_of_r) {
    std::vector<Vertex> verts = p.vertices();
    if (!p.degenerate()) {
      for (Vertex a : residual.in_neighbors(p.source())) {
        if (role[a] == 0) {
          verts.insert(verts.begin(), a);
          break;
        }
      }
      for (Vertex a : residual.out_neighbors(p.target())) {
        if (role[a] == 1) {
          verts.push_back(a);
          break;
        }
      }
    }
    Path grown{std::move(verts)};
    residual = residual.minus_edges(grown.edges());
    extended.push_back(std::move(grown));
  }

  Classification post = classify_decomposition(d, extended);
  if (!post.at_least(DecompositionKind::partial))
    throw std::logic_error("extension failed to stay partial: " +
                           first_violation(post));
  return extended;
}

PathDecomposition perfect_from_restriction(const Digraph& d,
                                           const VertexPartition& parts,
                                           const std::vector<Path>& perfect_of_r) {
  Digraph d_r = d.induced(parts.rest);
  Classification pre = classify_decomposition(d_r, perfect_of_r);
  if (pre.kind != DecompositionKind::perfect)
    throw std::invalid_argument("input is not a perfect decomposition of D[R]: " +
                                first_violation(pre));

  std::vector<Path> extended = extend_over_partition(d, parts, perfect_of_r);
  Digraph remainder = remove_decomposition(d, extended);
  PathDecomposition rest = acyclic_perfect_decomposition(remainder);

  PathDecomposition result;
  result.paths = std::move(extended);
  for (Path& p : rest.paths) result.paths.push_back(std::move(p));

  Classification post = classify_decomposition(d, result.paths);
  if (post.kind != DecompositionKind::perfect)
    throw std::logic_error("combined decomposition is not perfect: " +
                           first_violation(post));
  result.kind = DecompositionKind::perfect;
  return result;
}

}  // namespace pathdec
