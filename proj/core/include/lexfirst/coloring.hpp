#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lexfirst/cnf.hpp"
#include "lexfirst/graph.hpp"
#include "lexfirst/strings.hpp"

namespace lexfirst {

bool is_legal_coloring(const OrderedGraph& g, const Coloring& c);

/// How lf_coloring searches. All strategies return the same coloring; they differ
/// only in nodes_expanded and running time.
enum class SearchStrategy {
  /// Depth-first over vertices in order, colors ascending, checking only already
  /// colored neighbors. The reference behaviour.
  chronological,
  /// Same vertex and color order, plus forward checking of neighbor domains.
  forward_checking,
  /// Position-by-position prefix search: each candidate prefix is confirmed by an
  /// extension solver (DSATUR order with propagation) whose witness is reused, so a
  /// position is only re-checked for colors below the current witness.
  guided,
};

struct LfOptions {
  /// Ascending subset of {0..k-1}; empty means all k colors.
  std::vector<std::uint8_t> palette;
  SearchStrategy strategy = SearchStrategy::chronological;
  /// Optional per-vertex forced color (size 0 or n). A forced vertex is not restricted
  /// to the palette.
  std::vector<std::optional<std::uint8_t>> fixed;
};

struct LfColorResult {
  enum class Status { colored, uncolorable };

  Status status = Status::uncolorable;
  std::optional<Coloring> coloring;
  /// "1" followed by n zeros when uncolorable; empty otherwise.
  std::string sentinel;
  std::uint64_t nodes_expanded = 0;

  bool colored() const noexcept { return status == Status::colored; }
  /// The coloring digits, or the sentinel.
  std::string str() const { return coloring ? coloring->str() : sentinel; }
};

/// Lexicographically smallest legal coloring over the palette, or the 1·0^n sentinel.
LfColorResult lf_coloring(const OrderedGraph& g, int k, const LfOptions& options = {});

/// All legal colorings in lex order. Refuses (RefusalError) when k^n exceeds cap.
std::vector<Coloring> enumerate_legal_colorings(const OrderedGraph& g, int k, std::uint64_t cap);

bool is_k_colorable(const OrderedGraph& g, int k);

/// Any legal coloring found by the extension solver, nullopt if none exists.
std::optional<Coloring> find_coloring(const OrderedGraph& g, int k);

/// Encodes k-colorability as CNF: variable v*k + c + 1 means "vertex v has color c".
CnfFormula coloring_to_cnf(const OrderedGraph& g, int k);

/// k^n, or nullopt on overflow past cap.
std::optional<std::uint64_t> checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t cap);

}  // namespace lexfirst
