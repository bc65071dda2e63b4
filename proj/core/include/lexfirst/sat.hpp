#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lexfirst/cnf.hpp"
#include "lexfirst/strings.hpp"

namespace lexfirst {

/// Reads "p cnf n z" DIMACS. Comment lines start with 'c'; clauses end with 0 and
/// may span lines. The clause count must match the header.
CnfFormula parse_dimacs(std::string_view text);

enum class WideClauseMode {
  /// Clauses wider than three literals are refused.
  refuse,
  /// Wide clauses are split with fresh variables appended after x_n; the decision
  /// index is pinned to the last original variable.
  split,
};

/// Pads 1- and 2-literal clauses by repeating the last literal.
CnfFormula normalize_to_3cnf(const CnfFormula& f, WideClauseMode mode = WideClauseMode::refuse);

bool satisfies(const CnfFormula& f, const TFAssignment& a);

/// Lex-least satisfying assignment over {1,2}, or nullopt (printed "UNSAT").
std::optional<TFAssignment> lf_sat_assignment(const CnfFormula& f);

/// Same search with the first variables forced; `prefix` may be shorter than n.
std::optional<TFAssignment> lf_sat_assignment_with_prefix(const CnfFormula& f, const std::vector<std::uint8_t>& prefix);

enum class OddMinSat { member, nonmember };

OddMinSat decide_odd_min_sat(const CnfFormula& f);

/// Every satisfying assignment in lex order. Refuses when 2^n exceeds cap.
std::vector<TFAssignment> enumerate_satisfying(const CnfFormula& f, std::uint64_t cap);

/// Any model found by DPLL with clause learning (first-UIP clauses, activity branching,
/// Luby restarts), or nullopt.
std::optional<std::vector<bool>> dpll_solve(const CnfFormula& f);

}  // namespace lexfirst
