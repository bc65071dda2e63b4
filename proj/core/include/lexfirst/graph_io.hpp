#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "lexfirst/graph.hpp"

namespace lexfirst {

/// A graph plus the free-form "meta" object of the interchange format.
struct GraphDocument {
  OrderedGraph graph;
  nlohmann::json meta = nlohmann::json::object();
};

/// {"n", "labels", "edges" (sorted, i<j), "rotation"?, "roles"?, "meta"?}
nlohmann::json graph_to_json(const OrderedGraph& g, const nlohmann::json& meta = nullptr);
GraphDocument graph_from_json(const nlohmann::json& j);

std::string dump_graph(const OrderedGraph& g, const nlohmann::json& meta = nullptr);
GraphDocument parse_graph(std::string_view text);

}  // namespace lexfirst
