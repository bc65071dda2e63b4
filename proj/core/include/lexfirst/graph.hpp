#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lexfirst {

using Vertex = std::size_t;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class VertexRole {
  variable_positive,
  variable_negative,
  palette_b,
  palette_t,
  palette_f,
  clause_internal,
  wire,
  crossover,
  new_pendant,
  old,
};

std::string_view to_string(VertexRole role);
std::optional<VertexRole> parse_role(std::string_view tag);

/// Per-vertex cyclic order of incident neighbors (a combinatorial embedding).
using Rotation = std::vector<std::vector<Vertex>>;

/// A simple undirected graph whose vertex order is part of its identity: vertex i is
/// position i of every coloring or characteristic string of the graph.
class OrderedGraph {
 public:
  OrderedGraph() = default;

  /// Validates: indices < n, no self-loops, no duplicate edges, labels.size() == n
  /// (or empty, giving "v0".."v{n-1}"), rotation[v] a permutation of N(v).
  OrderedGraph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels = {},
               std::optional<Rotation> rotation = std::nullopt,
               std::map<Vertex, VertexRole> roles = {});

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Sorted, each with u < v.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Sorted ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Vertex a, Vertex b) const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }

  bool has_rotation() const noexcept { return rotation_.has_value(); }
  const std::optional<Rotation>& rotation() const noexcept { return rotation_; }

  const std::map<Vertex, VertexRole>& roles() const noexcept { return roles_; }
  std::optional<VertexRole> role(Vertex v) const;

  OrderedGraph with_rotation(Rotation rotation) const;
  OrderedGraph without_rotation() const;
  OrderedGraph with_roles(std::map<Vertex, VertexRole> roles) const;

  /// Reorders vertices: vertex order[i] of this graph becomes vertex i of the result.
  /// Edges, labels, rotation and roles are carried along.
  OrderedGraph permuted(const std::vector<Vertex>& order) const;

  friend bool operator==(const OrderedGraph&, const OrderedGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::optional<Rotation> rotation_;
  std::map<Vertex, VertexRole> roles_;
};

/// Small named graphs used throughout tests and the fixed corpora. All carry planar
/// rotation systems except where noted.
namespace named {
OrderedGraph empty();
OrderedGraph k1();
OrderedGraph k2();
OrderedGraph triangle();
/// Triangle 0,1,2 with vertex 3 in the interior face.
OrderedGraph k4();
OrderedGraph cycle(std::size_t n);
OrderedGraph path(std::size_t n);
/// K5 with the rotation system induced by a regular-pentagon drawing (genus > 0).
OrderedGraph k5();
}  // namespace named

}  // namespace lexfirst
