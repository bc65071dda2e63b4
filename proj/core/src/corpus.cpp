#include "lexfirst/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "lexfirst/embedding.hpp"
#include "lexfirst/errors.hpp"
#include "lexfirst/rng.hpp"

namespace lexfirst {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return labels;
}

OrderedGraph grow_planar(std::size_t n, Rng& rng) {
  std::vector<Edge> edges;
  Rotation rot(1);
  auto current = [&] {
    return OrderedGraph(rot.size(), edges, default_labels(rot.size()), rot);
  };
  if (n >= 2) {
    edges.emplace_back(0, 1);
    rot = {{1}, {0}};
  }
  while (rot.size() < n) {
    const auto faces = trace_faces(current());
    const Face& face = faces[rng.below(faces.size())];
    // One corner per distinct vertex: the corner at v sits between the incoming dart
    // (u -> v) and its successor.
    std::vector<std::pair<Vertex, Vertex>> corners;  // (v, u)
    std::vector<bool> seen(rot.size(), false);
    for (const Dart& d : face.darts) {
      if (seen[d.to]) continue;
      seen[d.to] = true;
      corners.emplace_back(d.to, d.from);
    }
    std::vector<std::pair<Vertex, Vertex>> chosen;
    for (const auto& c : corners) {
      if (rng.coin()) chosen.push_back(c);
    }
    if (chosen.empty()) chosen.push_back(corners[rng.below(corners.size())]);
    const Vertex x = rot.size();
    rot.emplace_back();
    for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
      const auto [v, u] = *it;
      auto& around = rot[v];
      around.insert(std::find(around.begin(), around.end(), u) + 1, x);
      rot[x].push_back(v);
      edges.emplace_back(v, x);
    }
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  rng.shuffle(order.begin(), order.end());
  return current().permuted(order);
}

}  // namespace

std::vector<OrderedGraph> gen_planar_corpus(std::size_t count, std::size_t n_max, std::uint64_t seed) {
  if (n_max > 12) throw UsageError("planar corpus supports n_max <= 12");
  if (n_max == 0 && count > 0) throw UsageError("planar corpus needs n_max >= 1");
  Rng rng(seed);
  std::vector<OrderedGraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = static_cast<std::size_t>(rng.between(1, n_max));
    OrderedGraph g = grow_planar(n, rng);
    const auto report = verify_embedding(g);
    if (!report || !report->planar) throw ContractError("planar corpus generator produced a nonplanar embedding");
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<CnfFormula> gen_cnf_corpus(std::size_t count, std::size_t n_max, std::size_t z_max, std::uint64_t seed) {
  if (count > 0 && (n_max == 0 || z_max == 0)) throw UsageError("CNF corpus needs n_max >= 1 and z_max >= 1");
  Rng rng(seed);
  std::vector<CnfFormula> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = static_cast<std::size_t>(rng.between(1, n_max));
    const auto z = static_cast<std::size_t>(rng.between(1, z_max));
    std::vector<Clause> clauses(z);
    for (auto& clause : clauses) {
      for (int j = 0; j < 3; ++j) {
        const auto var = static_cast<Literal>(rng.between(1, n));
        clause.push_back(rng.coin() ? var : -var);
      }
    }
    out.emplace_back(n, std::move(clauses));
  }
  return out;
}

std::vector<OrderedGraph> fixed_planar_graphs() {
  return {named::k1(), named::k2(), named::triangle(), named::k4(), named::cycle(5)};
}

}  // namespace lexfirst
