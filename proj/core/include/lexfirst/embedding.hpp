#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lexfirst/graph.hpp"

namespace lexfirst {

struct Point {
  double x = 0;
  double y = 0;
};

/// Counterclockwise neighbor order induced by a straight-line drawing.
Rotation rotation_from_coordinates(const OrderedGraph& g, const std::vector<Point>& positions);

/// A directed edge u -> v.
struct Dart {
  Vertex from = 0;
  Vertex to = 0;
  friend bool operator==(const Dart&, const Dart&) = default;
};

/// Closed boundary walk. The successor of dart (u -> v) is (v -> w) where w follows u
/// in the rotation of v, so faces of a counterclockwise drawing are walked with the
/// face on the left.
struct Face {
  std::vector<Dart> darts;
  /// Vertices in walk order (the tail of each dart).
  std::vector<Vertex> vertices() const;
  bool contains(Vertex v) const;
};

/// Traces every face of the rotation system. Isolated vertices contribute no darts
/// and therefore no traced face. Throws UsageError when the graph has no rotation.
std::vector<Face> trace_faces(const OrderedGraph& g);

struct EmbeddingReport {
  bool planar = false;
  /// Sum of per-component genera.
  std::size_t genus = 0;
  /// Faces counted per component; an isolated vertex counts as one face.
  std::size_t faces = 0;
  std::size_t components = 0;
};

/// Checks V - E + F = 2 - 2g per connected component of the rotation system.
/// Returns nullopt when the graph carries no rotation ("no-embedding").
std::optional<EmbeddingReport> verify_embedding(const OrderedGraph& g);

/// Adds a vertex adjacent only to `at`, inserted into at's rotation immediately after
/// its lowest-index neighbor. The new vertex takes index n.
OrderedGraph attach_pendant_in_rotation(const OrderedGraph& g, Vertex at, std::string new_label);

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const OrderedGraph& g);

}  // namespace lexfirst
