#pragma once

#include <cstdint>
#include <string>

#include "pathdec/digraph.hpp"

namespace pathdec {

// splitmix64; the base generator for every seeded family. Cheap to fork
// into per-instance streams, so results never depend on worker scheduling.
struct SplitMix64 {
  uint64_t state = 0;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() { return (next() >> 11) * 0x1.0p-53; }
};

// Deterministic child stream for instance `index` of a batch.
uint64_t derive_seed(uint64_t seed, uint64_t index);

enum class GeneratorKind {
  transitive,
  near_regular,
  random_uniform,
  skewed,
  acyclic_random,
};

std::string to_string(GeneratorKind kind);
GeneratorKind generator_kind_from_string(const std::string& name);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::random_uniform;
  int n = 1;
  uint64_t seed = 0;
  double bias = 0.5;  // skewed only; must lie in [0.5, 1)
};

// transitive: i->j iff i<j. near_regular: rotational tournament, plus one
// balanced extra round when n is even (so ex(T) = n/2). random_uniform: fair
// coin per pair. skewed(p): i->j with probability p for i<j. acyclic_random:
// each forward pair present with probability 1/2. Identical spec => identical
// digraph, bit for bit.
Digraph generate(const GeneratorSpec& spec);

}  // namespace pathdec
