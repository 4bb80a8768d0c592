#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pathdec/digraph.hpp"

namespace pathdec {

// Row-major adjacency bitstring (bit i*n+j set iff i->j), minimized over all
// vertex permutations. Requires n <= 8 so the code fits in 64 bits.
uint64_t canonical_adjacency_code(const Digraph& d);

// Rebuilds the digraph a canonical code describes.
Digraph digraph_from_code(uint64_t code, int n);

// Streams tournaments on n vertices in a deterministic order. Labeled mode
// yields all 2^(n(n-1)/2) orientations (n <= 6); iso mode yields canonical
// representatives, one per isomorphism class (n <= 8). Beyond those sizes an
// error recommends sampling instead.
void enumerate_tournaments(int n, bool up_to_iso,
                           const std::function<void(const Digraph&)>& yield);

std::vector<Digraph> all_tournaments(int n, bool up_to_iso);

// Labeled tournament on n vertices from the bits of `code`: pair (i, j),
// i < j, in lexicographic order; set bit = i->j.
Digraph tournament_from_bits(int n, uint64_t code);

}  // namespace pathdec
