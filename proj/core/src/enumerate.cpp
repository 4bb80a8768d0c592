#include "pathdec/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pathdec {

uint64_t canonical_adjacency_code(const Digraph& d) {
  const int n = d.vertex_count();
  if (n > 8)
    throw std::invalid_argument("canonical code supports n <= 8 (64 bits)");

  std::vector<uint64_t> row(n, 0);  // row[u] bit v = edge u->v
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : d.out_neighbors(u)) row[u] |= 1ULL << v;

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t best = ~0ULL;
  do {
    // perm[i] = original vertex placed at position i.
    uint64_t code = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && (row[perm[i]] >> perm[j]) & 1)
          code |= 1ULL << (i * n + j);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Digraph digraph_from_code(uint64_t code, int n) {
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && (code >> (i * n + j)) & 1) d.add_edge(i, j);
  return d;
}

Digraph tournament_from_bits(int n, uint64_t code) {
  Digraph d(n);
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((code >> bit) & 1)
        d.add_edge(i, j);
      else
        d.add_edge(j, i);
    }
  return d;
}

namespace {

std::vector<uint64_t> iso_class_codes(int n) {
  // Grow representatives one vertex at a time: every class on k vertices
  // restricts to a class on k-1, so extending every (k-1)-representative by
  // every orientation of the new vertex reaches every k-class.
  std::vector<uint64_t> codes{0};  // single vertex
  for (int k = 2; k <= n; ++k) {
    std::set<uint64_t> next;
    for (uint64_t code : codes) {
      Digraph base = digraph_from_code(code, k - 1);
      for (uint64_t ext = 0; ext < (1ULL << (k - 1)); ++ext) {
        Digraph t(k);
        for (const Edge& e : base.edges()) t.add_edge(e.from, e.to);
        for (int b = 0; b < k - 1; ++b) {
          if ((ext >> b) & 1)
            t.add_edge(k - 1, b);
          else
            t.add_edge(b, k - 1);
        }
        next.insert(canonical_adjacency_code(t));
      }
    }
    codes.assign(next.begin(), next.end());
  }
  return codes;
}

}  // namespace

void enumerate_tournaments(int n, bool up_to_iso,
                           const std::function<void(const Digraph&)>& yield) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (up_to_iso) {
    if (n > 8)
      throw std::invalid_argument(
          "iso enumeration supports n <= 8; sample larger sizes instead");
    for (uint64_t code : iso_class_codes(n)) yield(digraph_from_code(code, n));
    return;
  }
  if (n > 6)
    throw std::invalid_argument(
        "labeled enumeration supports n <= 6 (2^15 instances); use iso mode "
        "or sample larger sizes");
  const int pairs = n * (n - 1) / 2;
  for (uint64_t code = 0; code < (1ULL << pairs); ++code)
    yield(tournament_from_bits(n, code));
}

std::vector<Digraph> all_tournaments(int n, bool up_to_iso) {
  std::vector<Digraph> result;
  enumerate_tournaments(n, up_to_iso,
                        [&](const Digraph& d) { result.push_back(d); });
  return result;
}

}  // namespace pathdec
