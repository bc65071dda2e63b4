#pragma once

#include <cstdint>
#include <vector>

#include "lexfirst/cnf.hpp"
#include "lexfirst/graph.hpp"

namespace lexfirst {

/// Connected planar graphs with 1..n_max vertices (n_max <= 12), grown by inserting a
/// vertex into a face of the current embedding and joining it to some corners of that
/// face; vertex order is shuffled at the end. Deterministic in the seed.
std::vector<OrderedGraph> gen_planar_corpus(std::size_t count, std::size_t n_max, std::uint64_t seed);

/// Exactly-3-literal formulas with 1..n_max variables and 1..z_max clauses.
std::vector<CnfFormula> gen_cnf_corpus(std::size_t count, std::size_t n_max, std::size_t z_max, std::uint64_t seed);

/// K1, K2, K3, K4, C5 with planar rotations (the Petersen graph is excluded as nonplanar).
std::vector<OrderedGraph> fixed_planar_graphs();

}  // namespace lexfirst
