#include "lexfirst/pvariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "lexfirst/errors.hpp"
#include "lexfirst/graph_io.hpp"

namespace lexfirst {

using nlohmann::json;

namespace {

void count(Steps* steps, std::uint64_t by = 1) {
  if (steps) steps->count += by;
}

bool clause_satisfied(const Clause& c, const std::string& y) {
  return std::any_of(c.begin(), c.end(), [&](Literal lit) {
    const bool value = y[static_cast<std::size_t>(std::abs(lit)) - 1] == '1';
    return lit > 0 ? value : !value;
  });
}

bool binary(const std::string& y, std::size_t n) {
  return y.size() == n && std::all_of(y.begin(), y.end(), [](char c) { return c == '0' || c == '1'; });
}

}  // namespace

void PKnapsackInstance::validate() const {
  if (s.size() != v.size()) throw UsageError("p-knapsack: s and v differ in length");
  if (!elements.empty() && elements.size() != s.size()) throw UsageError("p-knapsack: element names differ in length");
  if (std::any_of(s.begin(), s.end(), [](auto x) { return x < 1; }) ||
      std::any_of(v.begin(), v.end(), [](auto x) { return x < 1; })) {
    throw UsageError("p-knapsack: sizes and values must be positive");
  }
  if (k < 1 || b < 1) throw UsageError("p-knapsack: k and b must be positive");
}

bool psat_member(const PSatInstance& inst, Steps* steps) {
  const auto target = static_cast<Literal>(inst.designated);
  for (const auto& clause : inst.formula.clauses()) {
    bool found = false;
    for (Literal lit : clause) {
      count(steps);
      if (lit == target) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool psat_solution(const PSatInstance& inst, const std::string& y) {
  if (!binary(y, inst.formula.variable_count())) return false;
  return std::all_of(inst.formula.clauses().begin(), inst.formula.clauses().end(),
                     [&](const Clause& c) { return clause_satisfied(c, y); });
}

std::optional<std::string> psat_lf(const PSatInstance& inst) {
  const CnfFormula& f = inst.formula;
  const std::size_t n = f.variable_count();
  std::vector<std::vector<const Clause*>> closing(n + 1);
  for (const auto& clause : f.clauses()) {
    std::size_t top = 0;
    for (Literal lit : clause) top = std::max(top, static_cast<std::size_t>(std::abs(lit)));
    closing[top].push_back(&clause);
  }
  if (!closing[0].empty()) return std::nullopt;
  std::string y(n, ' ');
  std::size_t i = 0;
  while (true) {
    if (i == n) return y;
    bool placed = false;
    while (y[i] != '1') {
      y[i] = y[i] == ' ' ? '0' : '1';
      if (std::all_of(closing[i + 1].begin(), closing[i + 1].end(),
                      [&](const Clause* c) { return clause_satisfied(*c, y); })) {
        placed = true;
        break;
      }
    }
    if (placed) {
      ++i;
      continue;
    }
    y[i] = ' ';
    if (i == 0) return std::nullopt;
    --i;
  }
}

std::string characteristic(std::size_t n, const std::vector<Vertex>& members) {
  std::string chi(n, '0');
  for (Vertex v : members) {
    if (v >= n) throw UsageError("subset member " + std::to_string(v) + " out of range");
    chi[v] = '1';
  }
  return chi;
}

bool pclique_member(const PCliqueInstance& inst, Steps* steps) {
  for (std::size_t i = 0; i < inst.c.size(); ++i) {
    for (std::size_t j = i + 1; j < inst.c.size(); ++j) {
      count(steps);
      if (inst.c[i] == inst.c[j]) continue;
      if (!inst.graph.has_edge(inst.c[i], inst.c[j])) return false;
    }
  }
  return true;
}

namespace {

std::size_t distinct_size(std::vector<Vertex> c) {
  std::sort(c.begin(), c.end());
  return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
}

}  // namespace

bool pclique_solution(const PCliqueInstance& inst, const std::string& chi) {
  const std::size_t n = inst.graph.vertex_count();
  if (!binary(chi, n)) return false;
  std::vector<Vertex> chosen;
  for (Vertex v = 0; v < n; ++v) {
    if (chi[v] == '1') chosen.push_back(v);
  }
  if (chosen.size() < distinct_size(inst.c)) return false;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    for (std::size_t j = i + 1; j < chosen.size(); ++j) {
      if (!inst.graph.has_edge(chosen[i], chosen[j])) return false;
    }
  }
  return true;
}

std::optional<std::string> pclique_lf(const PCliqueInstance& inst) {
  const std::size_t n = inst.graph.vertex_count();
  const std::size_t need = distinct_size(inst.c);
  std::string chi(n, ' ');
  std::vector<Vertex> chosen;
  std::size_t i = 0;
  // Depth-first, '0' before '1'; a branch survives while the chosen set is a clique
  // that can still reach the size bound.
  while (true) {
    if (i == n) return chi;
    bool placed = false;
    while (chi[i] != '1') {
      if (chi[i] == ' ') {
        chi[i] = '0';
        if (chosen.size() + (n - i - 1) >= need) {
          placed = true;
          break;
        }
      } else {
        chi[i] = '1';
        const bool ok = std::all_of(chosen.begin(), chosen.end(), [&](Vertex w) { return inst.graph.has_edge(w, i); });
        if (ok) {
          chosen.push_back(i);
          placed = true;
          break;
        }
      }
    }
    if (placed) {
      ++i;
      continue;
    }
    chi[i] = ' ';
    if (i == 0) return std::nullopt;
    --i;
    if (chi[i] == '1') chosen.pop_back();
  }
}

bool pknapsack_member(const PKnapsackInstance& inst, Steps* steps) {
  inst.validate();
  for (std::size_t i = 0; i < inst.s.size(); ++i) {
    count(steps);
    if (inst.s[i] <= inst.b && inst.v[i] >= inst.k) return true;
  }
  return false;
}

bool pknapsack_solution(const PKnapsackInstance& inst, const std::string& chi) {
  inst.validate();
  if (!binary(chi, inst.s.size())) return false;
  std::uint64_t size = 0, value = 0;
  for (std::size_t i = 0; i < chi.size(); ++i) {
    if (chi[i] != '1') continue;
    size += inst.s[i];
    value += inst.v[i];
  }
  return size <= inst.b && value >= inst.k;
}

std::optional<std::string> pknapsack_lf(const PKnapsackInstance& inst, std::uint64_t cap) {
  inst.validate();
  const std::size_t n = inst.s.size();
  if (n >= 63 || (std::uint64_t{1} << n) > cap) {
    throw RefusalError("refusing to search 2^" + std::to_string(n) + " subsets (cap " + std::to_string(cap) + ")");
  }
  std::vector<std::uint64_t> value_after(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) value_after[i] = value_after[i + 1] + inst.v[i];
  std::string chi(n, ' ');
  std::uint64_t size = 0, value = 0;
  std::size_t i = 0;
  while (true) {
    if (i == n) {
      if (value >= inst.k) return chi;
      // Dead leaf: fall through to backtracking.
    } else {
      bool placed = false;
      while (chi[i] != '1') {
        if (chi[i] == ' ') {
          chi[i] = '0';
          if (value + value_after[i + 1] >= inst.k) {
            placed = true;
            break;
          }
        } else {
          chi[i] = '1';
          if (size + inst.s[i] <= inst.b) {
            size += inst.s[i];
            value += inst.v[i];
            placed = true;
            break;
          }
        }
      }
      if (placed) {
        ++i;
        continue;
      }
      chi[i] = ' ';
    }
    if (i == 0) return std::nullopt;
    --i;
    if (chi[i] == '1') {
      size -= inst.s[i];
      value -= inst.v[i];
    }
  }
}

PSatInstance psat_from_json(const json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    auto clauses = j.at("clauses").get<std::vector<Clause>>();
    PSatInstance inst{CnfFormula(n, std::move(clauses)), j.at("designated").get<std::size_t>()};
    if (inst.designated < 1 || inst.designated > n) throw ParseError("p-sat: designated variable out of range", 0);
    return inst;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("p-sat JSON: ") + ex.what(), 0);
  } catch (const UsageError& ex) {
    throw ParseError(std::string("p-sat JSON: ") + ex.what(), 0);
  }
}

PCliqueInstance pclique_from_json(const json& j) {
  try {
    PCliqueInstance inst{graph_from_json(j.at("graph")).graph, j.at("c").get<std::vector<Vertex>>()};
    for (Vertex v : inst.c) {
      if (v >= inst.graph.vertex_count()) throw ParseError("p-clique: C member out of range", 0);
    }
    return inst;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("p-clique JSON: ") + ex.what(), 0);
  }
}

PKnapsackInstance pknapsack_from_json(const json& j) {
  try {
    PKnapsackInstance inst;
    inst.s = j.at("s").get<std::vector<std::uint64_t>>();
    inst.v = j.at("v").get<std::vector<std::uint64_t>>();
    inst.k = j.at("k").get<std::uint64_t>();
    inst.b = j.at("b").get<std::uint64_t>();
    if (j.contains("elements")) inst.elements = j["elements"].get<std::vector<std::string>>();
    inst.validate();
    return inst;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("p-knapsack JSON: ") + ex.what(), 0);
  } catch (const UsageError& ex) {
    throw ParseError(std::string("p-knapsack JSON: ") + ex.what(), 0);
  }
}

json to_json(const PSatInstance& inst) {
  return json{{"problem", "p-sat"},
              {"n", inst.formula.variable_count()},
              {"clauses", inst.formula.clauses()},
              {"designated", inst.designated}};
}

json to_json(const PCliqueInstance& inst) {
  return json{{"problem", "p-clique"}, {"graph", graph_to_json(inst.graph)}, {"c", inst.c}};
}

json to_json(const PKnapsackInstance& inst) {
  json j{{"problem", "p-knapsack"}, {"s", inst.s}, {"v", inst.v}, {"k", inst.k}, {"b", inst.b}};
  if (!inst.elements.empty()) j["elements"] = inst.elements;
  return j;
}

}  // namespace lexfirst
