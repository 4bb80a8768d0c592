#include "pathdec/excess.hpp"

#include <cstdlib>

namespace pathdec {

int excess(const Digraph& d, Vertex v) {
  return d.out_degree(v) - d.in_degree(v);
}

int excess_plus(const Digraph& d, Vertex v) {
  int e = excess(d, v);
  return e > 0 ? e : 0;
}

int excess_minus(const Digraph& d, Vertex v) {
  int e = excess(d, v);
  return e < 0 ? -e : 0;
}

ExcessProfile excess_profile(const Digraph& d) {
  ExcessProfile p;
  const int n = d.vertex_count();
  p.per_vertex.resize(n);
  long long abs_sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    int e = excess(d, v);
    p.per_vertex[v] = e;
    abs_sum += std::abs(e);
    if (e > 0)
      p.u_plus.push_back(v);
    else if (e < 0)
      p.u_minus.push_back(v);
    else
      p.u_zero.push_back(v);
  }
  p.total = abs_sum / 2;
  return p;
}

long long total_excess(const Digraph& d) {
  long long abs_sum = 0;
  for (Vertex v = 0; v < d.vertex_count(); ++v) abs_sum += std::abs(excess(d, v));
  return abs_sum / 2;
}

std::pair<std::vector<Vertex>, std::vector<Vertex>> threshold_sets(
    const Digraph& d, int s) {
  std::vector<Vertex> plus, minus;
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (excess_plus(d, v) >= s) plus.push_back(v);
    if (excess_minus(d, v) >= s) minus.push_back(v);
  }
  return {plus, minus};
}

}  // namespace pathdec
