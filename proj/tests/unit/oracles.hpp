#pragma once

// Brute-force reference implementations. They share nothing with the library
// beyond its value types: every check is spelled out over edge and clause lists.

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "lexfirst/cnf.hpp"
#include "lexfirst/graph.hpp"

namespace oracle {

inline bool legal(const lexfirst::OrderedGraph& g, const std::string& colors) {
  for (const auto& e : g.edges()) {
    if (colors[e.u] == colors[e.v]) return false;
  }
  return true;
}

/// Calls visit(s) for every string of length n over `symbols` in lex order until it
/// returns true; returns whether it did.
template <class Visit>
bool each_string(std::size_t n, const std::string& symbols, Visit visit) {
  std::vector<std::size_t> idx(n, 0);
  std::string s(n, symbols.empty() ? '?' : symbols[0]);
  if (symbols.empty()) return n == 0 && visit(s);
  while (true) {
    if (visit(s)) return true;
    std::size_t i = n;
    while (i > 0 && idx[i - 1] + 1 == symbols.size()) {
      idx[i - 1] = 0;
      s[i - 1] = symbols[0];
      --i;
    }
    if (i == 0) return false;
    ++idx[i - 1];
    s[i - 1] = symbols[idx[i - 1]];
  }
}

inline std::string digits(int k) {
  std::string s;
  for (int c = 0; c < k; ++c) s.push_back(static_cast<char>('0' + c));
  return s;
}

/// Lex-least legal coloring over `palette` (default 0..k-1), or nullopt.
inline std::optional<std::string> lf_coloring(const lexfirst::OrderedGraph& g, int k, std::string palette = "") {
  if (palette.empty()) palette = digits(k);
  std::optional<std::string> found;
  each_string(g.vertex_count(), palette, [&](const std::string& s) {
    if (!legal(g, s)) return false;
    found = s;
    return true;
  });
  return found;
}

inline std::vector<std::string> all_colorings(const lexfirst::OrderedGraph& g, int k) {
  std::vector<std::string> out;
  each_string(g.vertex_count(), digits(k), [&](const std::string& s) {
    if (legal(g, s)) out.push_back(s);
    return false;
  });
  return out;
}

/// Assignment over {1,2}; '1' is true.
inline bool satisfies(const lexfirst::CnfFormula& f, const std::string& a) {
  for (const auto& clause : f.clauses()) {
    bool sat = false;
    for (int lit : clause) {
      const bool value = a[static_cast<std::size_t>(std::abs(lit)) - 1] == '1';
      sat = sat || (lit > 0 ? value : !value);
    }
    if (!sat) return false;
  }
  return true;
}

inline std::vector<std::string> all_satisfying(const lexfirst::CnfFormula& f) {
  std::vector<std::string> out;
  each_string(f.variable_count(), "12", [&](const std::string& a) {
    if (satisfies(f, a)) out.push_back(a);
    return false;
  });
  return out;
}

inline std::optional<std::string> lf_sat(const lexfirst::CnfFormula& f) {
  std::optional<std::string> found;
  each_string(f.variable_count(), "12", [&](const std::string& a) {
    if (!satisfies(f, a)) return false;
    found = a;
    return true;
  });
  return found;
}

inline bool odd_min_sat(const lexfirst::CnfFormula& f) {
  const auto a = lf_sat(f);
  return a && !a->empty() && (*a)[f.decision_variable() - 1] == '1';
}

/// Least string in {0,1}^n accepted by pred.
template <class Pred>
std::optional<std::string> least_binary(std::size_t n, Pred pred) {
  std::optional<std::string> found;
  each_string(n, "01", [&](const std::string& s) {
    if (!pred(s)) return false;
    found = s;
    return true;
  });
  return found;
}

}  // namespace oracle
