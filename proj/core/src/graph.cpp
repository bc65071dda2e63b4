#include "lexfirst/graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "lexfirst/embedding.hpp"
#include "lexfirst/errors.hpp"

namespace lexfirst {

namespace {

constexpr std::array<std::pair<VertexRole, std::string_view>, 10> kRoleNames{{
    {VertexRole::variable_positive, "variable-positive"},
    {VertexRole::variable_negative, "variable-negative"},
    {VertexRole::palette_b, "palette-B"},
    {VertexRole::palette_t, "palette-T"},
    {VertexRole::palette_f, "palette-F"},
    {VertexRole::clause_internal, "clause-internal"},
    {VertexRole::wire, "wire"},
    {VertexRole::crossover, "crossover"},
    {VertexRole::new_pendant, "new-pendant"},
    {VertexRole::old, "old"},
}};

}  // namespace

std::string_view to_string(VertexRole role) {
  for (const auto& [r, name] : kRoleNames) {
    if (r == role) return name;
  }
  return "unknown";
}

std::optional<VertexRole> parse_role(std::string_view tag) {
  for (const auto& [r, name] : kRoleNames) {
    if (name == tag) return r;
  }
  return std::nullopt;
}

OrderedGraph::OrderedGraph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels,
                           std::optional<Rotation> rotation, std::map<Vertex, VertexRole> roles)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)), rotation_(std::move(rotation)),
      roles_(std::move(roles)) {
  for (auto& e : edges_) {
    if (e.u >= n_ || e.v >= n_) {
      throw UsageError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} references a vertex >= n=" + std::to_string(n_));
    }
    if (e.u == e.v) throw UsageError("self-loop at vertex " + std::to_string(e.u));
    e = Edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw UsageError("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
  }

  adjacency_.assign(n_, {});
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());

  if (labels_.empty()) {
    labels_.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) labels_.push_back("v" + std::to_string(i));
  } else if (labels_.size() != n_) {
    throw UsageError("label count " + std::to_string(labels_.size()) + " != n=" + std::to_string(n_));
  }

  if (rotation_) {
    if (rotation_->size() != n_) throw UsageError("rotation must list every vertex");
    for (Vertex v = 0; v < n_; ++v) {
      auto sorted = (*rotation_)[v];
      std::sort(sorted.begin(), sorted.end());
      if (sorted != adjacency_[v]) {
        throw UsageError("rotation of vertex " + std::to_string(v) + " is not a permutation of its neighbors");
      }
    }
  }

  for (const auto& [v, r] : roles_) {
    if (v >= n_) throw UsageError("role assigned to vertex " + std::to_string(v) + " >= n");
  }
}

bool OrderedGraph::has_edge(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_) return false;
  const auto& nb = adjacency_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<VertexRole> OrderedGraph::role(Vertex v) const {
  if (auto it = roles_.find(v); it != roles_.end()) return it->second;
  return std::nullopt;
}

OrderedGraph OrderedGraph::with_rotation(Rotation rotation) const {
  return OrderedGraph(n_, edges_, labels_, std::move(rotation), roles_);
}

OrderedGraph OrderedGraph::without_rotation() const {
  return OrderedGraph(n_, edges_, labels_, std::nullopt, roles_);
}

OrderedGraph OrderedGraph::with_roles(std::map<Vertex, VertexRole> roles) const {
  return OrderedGraph(n_, edges_, labels_, rotation_, std::move(roles));
}

OrderedGraph OrderedGraph::permuted(const std::vector<Vertex>& order) const {
  if (order.size() != n_) throw UsageError("permutation size mismatch");
  std::vector<Vertex> new_index(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (order[i] >= n_ || new_index[order[i]] != n_) throw UsageError("not a permutation");
    new_index[order[i]] = i;
  }
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) edges.emplace_back(new_index[e.u], new_index[e.v]);
  std::vector<std::string> labels(n_);
  for (std::size_t i = 0; i < n_; ++i) labels[i] = labels_[order[i]];
  std::optional<Rotation> rotation;
  if (rotation_) {
    Rotation r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (Vertex w : (*rotation_)[order[i]]) r[i].push_back(new_index[w]);
    }
    rotation = std::move(r);
  }
  std::map<Vertex, VertexRole> roles;
  for (const auto& [v, role] : roles_) roles[new_index[v]] = role;
  return OrderedGraph(n_, std::move(edges), std::move(labels), std::move(rotation), std::move(roles));
}

namespace named {

namespace {

OrderedGraph embedded(std::size_t n, std::vector<Edge> edges, const std::vector<Point>& pos) {
  OrderedGraph g(n, std::move(edges));
  return g.with_rotation(rotation_from_coordinates(g, pos));
}

std::vector<Point> regular_polygon(std::size_t n) {
  std::vector<Point> pos;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    pos.push_back({std::cos(a), std::sin(a)});
  }
  return pos;
}

}  // namespace

OrderedGraph empty() { return OrderedGraph(0, {}, {}, Rotation{}); }

OrderedGraph k1() { return OrderedGraph(1, {}, {}, Rotation(1)); }

OrderedGraph k2() { return embedded(2, {{0, 1}}, {{0, 0}, {1, 0}}); }

OrderedGraph triangle() { return embedded(3, {{0, 1}, {1, 2}, {0, 2}}, {{0, 0}, {1, 0}, {0, 1}}); }

OrderedGraph k4() {
  return embedded(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}},
                  {{0, 0}, {4, 0}, {2, 4}, {2, 1.5}});
}

OrderedGraph cycle(std::size_t n) {
  if (n < 3) throw UsageError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return embedded(n, std::move(edges), regular_polygon(n));
}

OrderedGraph path(std::size_t n) {
  std::vector<Edge> edges;
  std::vector<Point> pos;
  for (std::size_t i = 0; i < n; ++i) {
    pos.push_back({static_cast<double>(i), 0});
    if (i + 1 < n) edges.emplace_back(i, i + 1);
  }
  return embedded(n, std::move(edges), pos);
}

OrderedGraph k5() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i)
    for (Vertex j = i + 1; j < 5; ++j) edges.emplace_back(i, j);
  return embedded(5, std::move(edges), regular_polygon(5));
}

}  // namespace named

}  // namespace lexfirst
