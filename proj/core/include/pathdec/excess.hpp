#pragma once

#include <utility>
#include <vector>

#include "pathdec/digraph.hpp"

namespace pathdec {

// Per-vertex excess ex(v) = d+(v) - d-(v) together with the aggregate
// ex(D) = (1/2) sum |ex(v)| and the sign classes U+/U-/U0.
struct ExcessProfile {
  std::vector<int> per_vertex;
  long long total = 0;
  std::vector<Vertex> u_plus;
  std::vector<Vertex> u_minus;
  std::vector<Vertex> u_zero;

  int ex(Vertex v) const { return per_vertex[v]; }
  int ex_plus(Vertex v) const { return per_vertex[v] > 0 ? per_vertex[v] : 0; }
  int ex_minus(Vertex v) const { return per_vertex[v] < 0 ? -per_vertex[v] : 0; }
};

int excess(const Digraph& d, Vertex v);
int excess_plus(const Digraph& d, Vertex v);
int excess_minus(const Digraph& d, Vertex v);

ExcessProfile excess_profile(const Digraph& d);

// Total excess ex(D) without materializing the profile.
long long total_excess(const Digraph& d);

// W+_s = {v : ex+(v) >= s}, W-_s = {v : ex-(v) >= s}.
std::pair<std::vector<Vertex>, std::vector<Vertex>> threshold_sets(
    const Digraph& d, int s);

}  // namespace pathdec
