#include "lexfirst/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "lexfirst/errors.hpp"

namespace lexfirst {

CnfFormula::CnfFormula(std::size_t variable_count, std::vector<Clause> clauses,
                       std::optional<std::size_t> decision_index)
    : n_(variable_count), clauses_(std::move(clauses)), decision_(decision_index) {
  for (const auto& clause : clauses_) {
    for (Literal lit : clause) {
      if (lit == 0) throw UsageError("literal 0 is not a variable");
      if (static_cast<std::size_t>(std::abs(lit)) > n_) {
        throw UsageError("literal " + std::to_string(lit) + " exceeds variable count " + std::to_string(n_));
      }
    }
  }
  if (decision_ && (*decision_ == 0 || *decision_ > n_)) {
    throw UsageError("decision index " + std::to_string(*decision_) + " out of range [1," + std::to_string(n_) + "]");
  }
}

bool CnfFormula::has_empty_clause() const {
  return std::any_of(clauses_.begin(), clauses_.end(), [](const Clause& c) { return c.empty(); });
}

std::size_t CnfFormula::max_clause_width() const {
  std::size_t w = 0;
  for (const auto& c : clauses_) w = std::max(w, c.size());
  return w;
}

std::string CnfFormula::to_dimacs() const {
  std::ostringstream out;
  out << "p cnf " << n_ << ' ' << clauses_.size() << '\n';
  for (const auto& c : clauses_) {
    for (Literal lit : c) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

std::string CnfFormula::str() const {
  if (clauses_.empty()) return "T";
  std::string s;
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    if (i) s += " & ";
    s += '(';
    for (std::size_t j = 0; j < clauses_[i].size(); ++j) {
      if (j) s += " | ";
      const Literal lit = clauses_[i][j];
      if (lit < 0) s += '~';
      s += "x" + std::to_string(std::abs(lit));
    }
    s += ')';
  }
  return s;
}

}  // namespace lexfirst
