#include <algorithm>
#include <numeric>

#include "lexfirst/embedding.hpp"
#include "lexfirst/errors.hpp"
#include "lexfirst/reductions.hpp"
#include "lexfirst/sat.hpp"

namespace lexfirst {

using nlohmann::json;

json RhoOutput::meta() const {
  return json{{"reduction", k == 4 ? "rho4" : "rho" + std::to_string(k)}, {"m", m}, {"k", k}, {"block", block}};
}

json PipelineOutput::meta() const {
  json j = sigma.meta();
  j["reduction"] = "pipeline";
  j["sigma_vertices"] = sigma.m;
  j["vertices"] = rho.graph.vertex_count();
  return j;
}

namespace {

/// New vertices first (block by block, in old-vertex order), then the old vertices.
std::vector<Vertex> new_first_order(std::size_t m, std::size_t block) {
  std::vector<Vertex> order;
  for (std::size_t i = 0; i < m * block; ++i) order.push_back(m + i);
  for (std::size_t i = 0; i < m; ++i) order.push_back(i);
  return order;
}

std::map<Vertex, VertexRole> pendant_roles(std::size_t m, std::size_t block) {
  std::map<Vertex, VertexRole> roles;
  for (std::size_t i = 0; i < m * block; ++i) roles[i] = VertexRole::new_pendant;
  for (std::size_t i = 0; i < m; ++i) roles[m * block + i] = VertexRole::old;
  return roles;
}

/// A clique of `size` new vertices, each adjacent to its old vertex, drawn inside one
/// corner of the old vertex. Local id `size` stands for the old vertex.
struct Attachment {
  std::size_t size;
  std::vector<Vertex> insert;
  std::vector<std::vector<Vertex>> rotation;
};

Attachment attachment_for(int k) {
  switch (k) {
    case 5:
      return {2, {0, 1}, {{1, 2}, {2, 0}}};
    case 6:
      return {3, {0, 2, 1}, {{1, 2, 3}, {3, 2, 0}, {1, 3, 0}}};
    default:
      throw NotSupportedError("rho_k is implemented for k in {4,5,6}; got k=" + std::to_string(k));
  }
}

}  // namespace

RhoOutput rho4(const OrderedGraph& g) {
  const std::size_t m = g.vertex_count();
  OrderedGraph h = g.with_roles({});
  if (g.has_rotation()) {
    for (Vertex i = 0; i < m; ++i) h = attach_pendant_in_rotation(h, i, "u" + std::to_string(i + 1));
  } else {
    auto edges = g.edges();
    auto labels = g.labels();
    for (Vertex i = 0; i < m; ++i) {
      edges.emplace_back(i, m + i);
      labels.push_back("u" + std::to_string(i + 1));
    }
    h = OrderedGraph(2 * m, std::move(edges), std::move(labels));
  }
  h = h.permuted(new_first_order(m, 1)).with_roles(pendant_roles(m, 1));
  return RhoOutput{std::move(h), m, 1, 4};
}

RhoOutput rho_k(const OrderedGraph& g, int k) {
  if (k == 4) return rho4(g);
  const Attachment att = attachment_for(k);
  const std::size_t m = g.vertex_count();
  const std::size_t s = att.size;
  auto edges = g.edges();
  auto labels = g.labels();
  const auto global = [&](Vertex old, Vertex local) { return local == s ? old : m + old * s + local; };
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex a = 0; a < s; ++a) {
      labels.push_back("u" + std::to_string(i * s + a + 1));
      edges.emplace_back(global(i, a), i);
      for (Vertex b = a + 1; b < s; ++b) edges.emplace_back(global(i, a), global(i, b));
    }
  }
  std::optional<Rotation> rotation;
  if (g.has_rotation()) {
    Rotation rot = *g.rotation();
    rot.resize(m + m * s);
    for (Vertex i = 0; i < m; ++i) {
      std::vector<Vertex> block;
      for (Vertex local : att.insert) block.push_back(global(i, local));
      auto& around = rot[i];
      const auto where = around.empty() ? around.end() : std::min_element(around.begin(), around.end()) + 1;
      around.insert(where, block.begin(), block.end());
      for (Vertex a = 0; a < s; ++a) {
        for (Vertex local : att.rotation[a]) rot[global(i, a)].push_back(global(i, local));
      }
    }
    rotation = std::move(rot);
  }
  OrderedGraph h(m + m * s, std::move(edges), std::move(labels), std::move(rotation));
  h = h.permuted(new_first_order(m, s)).with_roles(pendant_roles(m, s));
  return RhoOutput{std::move(h), m, s, k};
}

bool rho_pattern_holds(const RhoOutput& rho, const std::string& lf) {
  const std::size_t head = rho.m * rho.block;
  if (lf.size() != head + rho.m) return false;
  for (std::size_t i = 0; i < head; ++i) {
    if (lf[i] != static_cast<char>('0' + i % rho.block)) return false;
  }
  for (std::size_t i = head; i < lf.size(); ++i) {
    const int d = lf[i] - '0';
    if (d < static_cast<int>(rho.block) || d >= rho.k) return false;
  }
  return true;
}

PipelineOutput pipeline_t(const CnfFormula& f, const SigmaOptions& options) {
  SigmaOutput s = sigma(normalize_to_3cnf(f), options);
  RhoOutput r = rho4(s.graph);
  return PipelineOutput{std::move(s), std::move(r)};
}

bool thm23_pattern_holds(const std::string& lf, std::size_t m, std::size_t n) {
  if (n == 0 || m <= n || lf.size() != 2 * m) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (lf[i] != '0') return false;
  }
  for (std::size_t i = m; i + 1 < m + n; ++i) {
    if (lf[i] != '1' && lf[i] != '2') return false;
  }
  if (lf[m + n - 1] != '1') return false;
  for (std::size_t i = m + n; i < 2 * m; ++i) {
    if (lf[i] < '1' || lf[i] > '3') return false;
  }
  return true;
}

}  // namespace lexfirst
