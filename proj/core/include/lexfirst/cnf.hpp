#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lexfirst {

/// Nonzero signed 1-based variable index; negative means the negated variable.
using Literal = int;
using Clause = std::vector<Literal>;

/// A CNF formula over variables x_1..x_n with a designated decision variable
/// (default x_n) for the odd/even test.
///
/// An empty clause is representable and means "false"; parsers and normalizers
/// reject it, but the SAT self-reduction produces it when a substitution falsifies
/// every literal of a clause.
class CnfFormula {
 public:
  CnfFormula() = default;
  CnfFormula(std::size_t variable_count, std::vector<Clause> clauses,
             std::optional<std::size_t> decision_index = std::nullopt);

  std::size_t variable_count() const noexcept { return n_; }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }
  std::size_t clause_count() const noexcept { return clauses_.size(); }
  const std::optional<std::size_t>& decision_index() const noexcept { return decision_; }
  /// 1-based variable read by the odd test; n when unset.
  std::size_t decision_variable() const noexcept { return decision_.value_or(n_); }

  bool has_empty_clause() const;
  std::size_t max_clause_width() const;

  std::string to_dimacs() const;
  /// Compact human-readable form, e.g. "(x1 | ~x2 | x3) & (x2)".
  std::string str() const;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Clause> clauses_;
  std::optional<std::size_t> decision_;
};

}  // namespace lexfirst
