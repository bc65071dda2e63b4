#pragma once

// Hand-rolled generators for the property tests. Every generator is a pure function
// of the engine state, so a failing case is reproduced by its seed.

#include <random>
#include <string>
#include <vector>

#include "lexfirst/cnf.hpp"
#include "lexfirst/graph.hpp"

namespace gen {

using Engine = std::mt19937_64;

inline std::size_t uniform(Engine& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

inline bool coin(Engine& rng) { return (rng() & 1) != 0; }

/// Arbitrary simple graph without rotation; density in tenths.
inline lexfirst::OrderedGraph graph(Engine& rng, std::size_t n_max) {
  const std::size_t n = uniform(rng, 0, n_max);
  const std::size_t density = uniform(rng, 0, 10);
  std::vector<lexfirst::Edge> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (uniform(rng, 1, 10) <= density) edges.emplace_back(a, b);
    }
  }
  return lexfirst::OrderedGraph(n, edges);
}

/// Clauses of width 1..w_max over n variables.
inline lexfirst::CnfFormula cnf(Engine& rng, std::size_t n_max, std::size_t z_max, std::size_t w_max = 3) {
  const std::size_t n = uniform(rng, 1, n_max);
  const std::size_t z = uniform(rng, 0, z_max);
  std::vector<lexfirst::Clause> clauses(z);
  for (auto& clause : clauses) {
    const std::size_t w = uniform(rng, 1, w_max);
    for (std::size_t i = 0; i < w; ++i) {
      const int var = static_cast<int>(uniform(rng, 1, n));
      clause.push_back(coin(rng) ? var : -var);
    }
  }
  return lexfirst::CnfFormula(n, clauses);
}

inline std::string string_over(Engine& rng, const std::string& alphabet, std::size_t len) {
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s.push_back(alphabet[uniform(rng, 0, alphabet.size() - 1)]);
  return s;
}

}  // namespace gen
