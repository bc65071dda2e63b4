#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lexfirst/graph.hpp"

namespace lexfirst {

/// Bitmask of permitted colors for one vertex (bit c = color c), k <= 16.
using ColorSet = std::uint16_t;

/// Decides whether per-vertex color domains admit a legal coloring and returns one.
///
/// Branches on the unassigned vertex with the fewest remaining colors (ties: higher
/// degree, then lower index), tries its colors ascending, and propagates every
/// assignment to neighbor domains, assigning singletons eagerly.
class ExtensionSolver {
 public:
  ExtensionSolver(const OrderedGraph& g, int k);

  std::optional<std::vector<std::uint8_t>> solve(const std::vector<ColorSet>& domains);

  /// Search nodes (branching assignments) over the lifetime of the solver.
  std::uint64_t nodes() const noexcept { return nodes_; }
  int k() const noexcept { return k_; }

 private:
  bool assign(std::size_t v, std::uint8_t c);
  bool propagate();
  bool search();
  void undo_to(std::size_t mark);

  std::vector<std::vector<std::size_t>> adjacency_;
  int k_;
  std::vector<ColorSet> domain_;
  std::vector<int> color_;
  /// (vertex, previous domain, previous color)
  struct TrailEntry {
    std::size_t v;
    ColorSet domain;
    int color;
  };
  std::vector<TrailEntry> trail_;
  std::vector<std::size_t> queue_;
  std::uint64_t nodes_ = 0;
};

}  // namespace lexfirst
