#include "lexfirst/graph_io.hpp"

#include "lexfirst/errors.hpp"

namespace lexfirst {

using nlohmann::json;

json graph_to_json(const OrderedGraph& g, const json& meta) {
  json j;
  j["n"] = g.vertex_count();
  j["labels"] = g.labels();
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  if (g.has_rotation()) j["rotation"] = *g.rotation();
  if (!g.roles().empty()) {
    json roles = json::object();
    for (const auto& [v, r] : g.roles()) roles[std::to_string(v)] = std::string(to_string(r));
    j["roles"] = std::move(roles);
  }
  if (!meta.is_null()) j["meta"] = meta;
  return j;
}

GraphDocument graph_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ParseError("graph document must be a JSON object", 0);
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair [i,j]", 0);
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    std::optional<Rotation> rotation;
    if (j.contains("rotation") && !j["rotation"].is_null()) rotation = j["rotation"].get<Rotation>();
    std::map<Vertex, VertexRole> roles;
    if (j.contains("roles")) {
      for (const auto& [key, tag] : j["roles"].items()) {
        const auto role = parse_role(tag.get<std::string>());
        if (!role) throw ParseError("unknown role tag \"" + tag.get<std::string>() + "\"", 0);
        roles[std::stoul(key)] = *role;
      }
    }
    GraphDocument doc{OrderedGraph(n, std::move(edges), std::move(labels), std::move(rotation), std::move(roles)),
                      j.contains("meta") ? j["meta"] : json::object()};
    return doc;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("graph JSON: ") + ex.what(), 0);
  } catch (const UsageError& ex) {
    throw ParseError(std::string("graph JSON: ") + ex.what(), 0);
  }
}

std::string dump_graph(const OrderedGraph& g, const json& meta) { return graph_to_json(g, meta).dump(2) + "\n"; }

GraphDocument parse_graph(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw ParseError(std::string("graph JSON: ") + ex.what(), 0);
  }
  return graph_from_json(j);
}

}  // namespace lexfirst
