#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "lexfirst/cnf.hpp"
#include "lexfirst/selfred.hpp"

namespace lexfirst {

/// SAT as a projection: B(F, y) iff |y| = n and y satisfies F, with |F| = n and
/// p(s) = s. `true_symbol` and `false_symbol` fix the encoding ({1,2}: '1','2';
/// {0,1}: '1','0').
ProjectionProblem<CnfFormula> sat_projection(char true_symbol = '1', char false_symbol = '2');

/// Fixes x_1 to a truth value; clauses it satisfies vanish, its literals are removed
/// elsewhere (possibly leaving an empty clause), and x_2..x_n become x_1..x_{n-1}.
CnfFormula substitute_first(const CnfFormula& f, bool value);

enum class SatReductionVariant { standard, identity, flipped };

/// g(F, gamma) = F[x_1 := gamma]; F' < F iff F' has fewer variables. The chain
/// F > g(F,.) > ... reaches 0 variables after n steps, so it has n + 1 elements;
/// q defaults to s + 1.
SelfReduction<CnfFormula> sat_self_reduction(SatReductionVariant variant = SatReductionVariant::standard,
                                             PolynomialBound q = PolynomialBound::identity_plus(1),
                                             char true_symbol = '1');

/// Strings over {0,1}; B(x, y) iff y = "1" and x starts with 1; p = 1.
ProjectionProblem<std::string> toy_projection();

enum class DChoice { all, prefix1 };

std::string_view to_string(DChoice d);
std::optional<DChoice> parse_d_choice(std::string_view text);

/// all: every string. prefix1: strings starting with 1.
std::function<bool(const std::string&)> toy_d(DChoice d);

/// all: every formula. prefix1: formulas with no empty clause and no complementary
/// pair of unit clauses (a clause whose literals are all l next to one whose literals
/// are all ~l).
std::function<bool(const CnfFormula&)> sat_d(DChoice d);

}  // namespace lexfirst
