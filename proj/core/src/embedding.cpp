#include "lexfirst/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lexfirst/errors.hpp"

namespace lexfirst {

Rotation rotation_from_coordinates(const OrderedGraph& g, const std::vector<Point>& positions) {
  if (positions.size() != g.vertex_count()) throw UsageError("one position per vertex required");
  Rotation rot(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    rot[v] = g.neighbors(v);
    auto angle = [&](Vertex w) {
      return std::atan2(positions[w].y - positions[v].y, positions[w].x - positions[v].x);
    };
    std::stable_sort(rot[v].begin(), rot[v].end(), [&](Vertex a, Vertex b) { return angle(a) < angle(b); });
  }
  return rot;
}

std::vector<Vertex> Face::vertices() const {
  std::vector<Vertex> out;
  out.reserve(darts.size());
  for (const auto& d : darts) out.push_back(d.from);
  return out;
}

bool Face::contains(Vertex v) const {
  return std::any_of(darts.begin(), darts.end(), [v](const Dart& d) { return d.from == v; });
}

namespace {

/// Dart bookkeeping for a rotation system: dart id = offset[v] + position in rot[v].
struct DartIndex {
  const Rotation& rot;
  std::vector<std::size_t> offset;
  /// position_of[v] holds (neighbor, position) sorted by neighbor.
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> position_of;

  explicit DartIndex(const Rotation& r) : rot(r), offset(r.size() + 1, 0), position_of(r.size()) {
    for (std::size_t v = 0; v < r.size(); ++v) {
      offset[v + 1] = offset[v] + r[v].size();
      for (std::size_t i = 0; i < r[v].size(); ++i) position_of[v].emplace_back(r[v][i], i);
      std::sort(position_of[v].begin(), position_of[v].end());
    }
  }

  std::size_t dart_count() const { return offset.back(); }

  std::size_t position(Vertex v, Vertex w) const {
    const auto& p = position_of[v];
    auto it = std::lower_bound(p.begin(), p.end(), std::make_pair(w, std::size_t{0}));
    if (it == p.end() || it->first != w) throw UsageError("malformed rotation: missing reverse dart");
    return it->second;
  }

  Dart dart(std::size_t id) const {
    const auto v = static_cast<Vertex>(std::upper_bound(offset.begin(), offset.end(), id) - offset.begin() - 1);
    return {v, rot[v][id - offset[v]]};
  }

  std::size_t id(const Dart& d) const { return offset[d.from] + position(d.from, d.to); }

  std::size_t next(std::size_t id_) const {
    const Dart d = dart(id_);
    const auto& around = rot[d.to];
    const std::size_t p = position(d.to, d.from);
    return offset[d.to] + (p + 1) % around.size();
  }
};

const Rotation& require_rotation(const OrderedGraph& g) {
  if (!g.has_rotation()) throw UsageError("graph has no rotation system");
  return *g.rotation();
}

}  // namespace

std::vector<Face> trace_faces(const OrderedGraph& g) {
  const DartIndex index(require_rotation(g));
  std::vector<char> seen(index.dart_count(), 0);
  std::vector<Face> faces;
  for (std::size_t start = 0; start < index.dart_count(); ++start) {
    if (seen[start]) continue;
    Face f;
    std::size_t d = start;
    do {
      seen[d] = 1;
      f.darts.push_back(index.dart(d));
      d = index.next(d);
    } while (d != start);
    faces.push_back(std::move(f));
  }
  return faces;
}

std::vector<std::vector<Vertex>> connected_components(const OrderedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> comp(n, n);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    std::vector<Vertex> members{s};
    comp[s] = out.size();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Vertex w : g.neighbors(members[i])) {
        if (comp[w] == n) {
          comp[w] = out.size();
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::optional<EmbeddingReport> verify_embedding(const OrderedGraph& g) {
  if (!g.has_rotation()) return std::nullopt;
  const auto& rot = *g.rotation();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto sorted = rot[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbors(v)) throw UsageError("malformed rotation at vertex " + std::to_string(v));
  }

  const auto components = connected_components(g);
  std::vector<std::size_t> comp_of(g.vertex_count());
  for (std::size_t c = 0; c < components.size(); ++c)
    for (Vertex v : components[c]) comp_of[v] = c;

  std::vector<std::size_t> faces(components.size(), 0), edges(components.size(), 0);
  for (const auto& f : trace_faces(g)) ++faces[comp_of[f.darts.front().from]];
  for (const auto& e : g.edges()) ++edges[comp_of[e.u]];

  EmbeddingReport report;
  report.components = components.size();
  for (std::size_t c = 0; c < components.size(); ++c) {
    const std::size_t f = std::max<std::size_t>(faces[c], 1);
    const long long euler = static_cast<long long>(components[c].size()) - static_cast<long long>(edges[c]) +
                            static_cast<long long>(f);
    const long long twice_genus = 2 - euler;
    if (twice_genus < 0 || twice_genus % 2 != 0) {
      throw UsageError("rotation system violates the Euler characteristic bound");
    }
    report.genus += static_cast<std::size_t>(twice_genus / 2);
    report.faces += f;
  }
  report.planar = report.genus == 0;
  return report;
}

OrderedGraph attach_pendant_in_rotation(const OrderedGraph& g, Vertex at, std::string new_label) {
  if (!g.has_rotation()) throw UsageError("attach_pendant_in_rotation requires a rotation system");
  const std::size_t n = g.vertex_count();
  if (at >= n) throw UsageError("attach_pendant_in_rotation: vertex " + std::to_string(at) + " out of range");

  auto edges = g.edges();
  edges.emplace_back(at, n);
  auto labels = g.labels();
  labels.push_back(std::move(new_label));
  Rotation rot = *g.rotation();
  auto& around = rot[at];
  if (around.empty()) {
    around.push_back(n);
  } else {
    const auto lowest = std::min_element(around.begin(), around.end());
    around.insert(lowest + 1, n);
  }
  rot.push_back({at});
  return OrderedGraph(n + 1, std::move(edges), std::move(labels), std::move(rot), g.roles());
}

}  // namespace lexfirst
