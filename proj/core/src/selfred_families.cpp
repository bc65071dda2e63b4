#include "lexfirst/selfred_families.hpp"

#include <cstdlib>
#include <set>

#include "lexfirst/errors.hpp"

namespace lexfirst {

ProjectionProblem<CnfFormula> sat_projection(char true_symbol, char false_symbol) {
  if (true_symbol == false_symbol) throw UsageError("true and false symbols must differ");
  ProjectionProblem<CnfFormula> pp;
  pp.name = std::string("sat") + std::min(true_symbol, false_symbol) + std::max(true_symbol, false_symbol);
  pp.pair = [true_symbol, false_symbol](const CnfFormula& f, std::string_view y) {
    if (y.size() != f.variable_count()) return false;
    for (char c : y) {
      if (c != true_symbol && c != false_symbol) return false;
    }
    for (const auto& clause : f.clauses()) {
      bool sat = false;
      for (Literal lit : clause) {
        const bool value = y[static_cast<std::size_t>(std::abs(lit)) - 1] == true_symbol;
        if (lit > 0 ? value : !value) {
          sat = true;
          break;
        }
      }
      if (!sat) return false;
    }
    return true;
  };
  pp.size = [](const CnfFormula& f) { return f.variable_count(); };
  pp.p = PolynomialBound{0, 1};
  pp.alphabet = {std::min(true_symbol, false_symbol), std::max(true_symbol, false_symbol)};
  pp.instance_alphabet = "CNF";
  pp.describe = [](const CnfFormula& f) { return "n=" + std::to_string(f.variable_count()) + " " + f.str(); };
  return pp;
}

CnfFormula substitute_first(const CnfFormula& f, bool value) {
  const std::size_t n = f.variable_count();
  if (n == 0) return f;
  std::vector<Clause> clauses;
  for (const auto& clause : f.clauses()) {
    bool satisfied = false;
    Clause rest;
    for (Literal lit : clause) {
      if (std::abs(lit) == 1) {
        if ((lit > 0) == value) satisfied = true;
        continue;
      }
      rest.push_back(lit > 0 ? lit - 1 : lit + 1);
    }
    if (!satisfied) clauses.push_back(std::move(rest));
  }
  std::optional<std::size_t> decision;
  if (f.decision_index() && *f.decision_index() > 1) decision = *f.decision_index() - 1;
  return CnfFormula(n - 1, std::move(clauses), decision);
}

SelfReduction<CnfFormula> sat_self_reduction(SatReductionVariant variant, PolynomialBound q, char true_symbol) {
  SelfReduction<CnfFormula> sr;
  switch (variant) {
    case SatReductionVariant::standard:
      sr.reduce = [true_symbol](const CnfFormula& f, char gamma) { return substitute_first(f, gamma == true_symbol); };
      break;
    case SatReductionVariant::identity:
      sr.reduce = [](const CnfFormula& f, char) { return f; };
      break;
    case SatReductionVariant::flipped:
      sr.reduce = [true_symbol](const CnfFormula& f, char gamma) { return substitute_first(f, gamma != true_symbol); };
      break;
  }
  sr.less_than = [](const CnfFormula& a, const CnfFormula& b) { return a.variable_count() < b.variable_count(); };
  sr.q = std::move(q);
  return sr;
}

ProjectionProblem<std::string> toy_projection() {
  ProjectionProblem<std::string> pp;
  pp.name = "toy";
  pp.pair = [](const std::string& x, std::string_view y) { return y == "1" && !x.empty() && x[0] == '1'; };
  pp.size = [](const std::string& x) { return x.size(); };
  pp.p = PolynomialBound::constant(1);
  pp.alphabet = "01";
  pp.instance_alphabet = "01";
  pp.describe = [](const std::string& x) { return "\"" + x + "\""; };
  return pp;
}

std::string_view to_string(DChoice d) { return d == DChoice::all ? "all" : "prefix1"; }

std::optional<DChoice> parse_d_choice(std::string_view text) {
  if (text == "all") return DChoice::all;
  if (text == "prefix1") return DChoice::prefix1;
  return std::nullopt;
}

std::function<bool(const std::string&)> toy_d(DChoice d) {
  if (d == DChoice::all) return [](const std::string&) { return true; };
  return [](const std::string& x) { return !x.empty() && x[0] == '1'; };
}

std::function<bool(const CnfFormula&)> sat_d(DChoice d) {
  if (d == DChoice::all) return [](const CnfFormula&) { return true; };
  return [](const CnfFormula& f) {
    std::set<Literal> units;
    for (const auto& clause : f.clauses()) {
      if (clause.empty()) return false;
      bool uniform = true;
      for (Literal lit : clause) uniform = uniform && lit == clause[0];
      if (uniform) units.insert(clause[0]);
    }
    for (Literal lit : units) {
      if (units.count(-lit)) return false;
    }
    return true;
  };
}

}  // namespace lexfirst
