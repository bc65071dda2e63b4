#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lexfirst/cnf.hpp"
#include "lexfirst/graph.hpp"

namespace lexfirst {

/// Solutions of all three problems are strings over {0,1}; '1' means true / chosen.

struct PSatInstance {
  CnfFormula formula;
  /// 1-based variable that must occur positively in every clause.
  std::size_t designated = 1;
};

struct PCliqueInstance {
  OrderedGraph graph;
  std::vector<Vertex> c;
};

struct PKnapsackInstance {
  std::vector<std::string> elements;
  std::vector<std::uint64_t> s;
  std::vector<std::uint64_t> v;
  std::uint64_t k = 1;
  std::uint64_t b = 1;

  /// Throws UsageError unless sizes agree, s, v >= 1 and k, b >= 1.
  void validate() const;
};

/// Optional step counters for the membership deciders.
struct Steps {
  std::uint64_t count = 0;
};

bool psat_member(const PSatInstance& inst, Steps* steps = nullptr);
bool psat_solution(const PSatInstance& inst, const std::string& y);
std::optional<std::string> psat_lf(const PSatInstance& inst);

bool pclique_member(const PCliqueInstance& inst, Steps* steps = nullptr);
bool pclique_solution(const PCliqueInstance& inst, const std::string& chi);
std::optional<std::string> pclique_lf(const PCliqueInstance& inst);

bool pknapsack_member(const PKnapsackInstance& inst, Steps* steps = nullptr);
bool pknapsack_solution(const PKnapsackInstance& inst, const std::string& chi);
/// Refuses (RefusalError) when 2^|U| exceeds cap.
std::optional<std::string> pknapsack_lf(const PKnapsackInstance& inst, std::uint64_t cap = std::uint64_t{1} << 24);

/// Characteristic string of a vertex subset.
std::string characteristic(std::size_t n, const std::vector<Vertex>& members);

/// Instance files: {"problem": "p-sat", "n", "clauses", "designated"},
/// {"problem": "p-clique", "graph", "c"}, {"problem": "p-knapsack", "elements"?, "s", "v", "k", "b"}.
PSatInstance psat_from_json(const nlohmann::json& j);
PCliqueInstance pclique_from_json(const nlohmann::json& j);
PKnapsackInstance pknapsack_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PSatInstance& inst);
nlohmann::json to_json(const PCliqueInstance& inst);
nlohmann::json to_json(const PKnapsackInstance& inst);

}  // namespace lexfirst
