#include "pathdec/generate.hpp"

#include <stdexcept>

namespace pathdec {

uint64_t derive_seed(uint64_t seed, uint64_t index) {
  SplitMix64 g(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
  return g.next();
}

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::transitive: return "transitive";
    case GeneratorKind::near_regular: return "near_regular";
    case GeneratorKind::random_uniform: return "random_uniform";
    case GeneratorKind::skewed: return "skewed";
    case GeneratorKind::acyclic_random: return "acyclic_random";
  }
  return "unknown";
}

GeneratorKind generator_kind_from_string(const std::string& name) {
  if (name == "transitive") return GeneratorKind::transitive;
  if (name == "near_regular") return GeneratorKind::near_regular;
  if (name == "random_uniform") return GeneratorKind::random_uniform;
  if (name == "skewed") return GeneratorKind::skewed;
  if (name == "acyclic_random") return GeneratorKind::acyclic_random;
  throw std::invalid_argument("unknown generator kind '" + name + "'");
}

Digraph generate(const GeneratorSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("generator needs n >= 1");
  const int n = spec.n;
  Digraph d(n);

  switch (spec.kind) {
    case GeneratorKind::transitive:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d.add_edge(i, j);
      break;

    case GeneratorKind::near_regular: {
      const int rounds = (n - 1) / 2;
      for (int k = 1; k <= rounds; ++k)
        for (int i = 0; i < n; ++i) d.add_edge(i, (i + k) % n);
      if (n % 2 == 0)
        for (int i = 0; i < n / 2; ++i) d.add_edge(i, i + n / 2);
      break;
    }

    case GeneratorKind::random_uniform: {
      SplitMix64 rng(spec.seed);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (rng.next_double() < 0.5)
            d.add_edge(i, j);
          else
            d.add_edge(j, i);
        }
      break;
    }

    case GeneratorKind::skewed: {
      if (spec.bias < 0.5 || spec.bias >= 1.0)
        throw std::invalid_argument("skewed bias must lie in [0.5, 1)");
      SplitMix64 rng(spec.seed);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (rng.next_double() < spec.bias)
            d.add_edge(i, j);
          else
            d.add_edge(j, i);
        }
      break;
    }

    case GeneratorKind::acyclic_random: {
      SplitMix64 rng(spec.seed);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng.next_double() < 0.5) d.add_edge(i, j);
      break;
    }
  }
  return d;
}

}  // namespace pathdec
