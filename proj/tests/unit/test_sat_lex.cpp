#include <algorithm>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "lexfirst/corpus.hpp"
#include "lexfirst/errors.hpp"
#include "lexfirst/sat.hpp"
#include "oracles.hpp"

using namespace lexfirst;

namespace {

std::string lf_str(const CnfFormula& f) {
  const auto a = lf_sat_assignment(f);
  return a ? a->str() : "UNSAT";
}

}  // namespace

TEST(ParseDimacs, Examples) {
  const CnfFormula a = parse_dimacs("p cnf 2 1\n1 2 0\n");
  EXPECT_EQ(a.variable_count(), 2u);
  EXPECT_EQ(a.clauses(), (std::vector<Clause>{{1, 2}}));
  EXPECT_EQ(a.decision_variable(), 2u);
  const CnfFormula b = parse_dimacs("c units\np cnf 1 2\n1 0\n-1 0\n");
  EXPECT_EQ(b.clauses(), (std::vector<Clause>{{1}, {-1}}));
  const CnfFormula c = parse_dimacs("p cnf 3 1\n1 -2\n 3 0\n");
  EXPECT_EQ(c.clauses(), (std::vector<Clause>{{1, -2, 3}}));
}

TEST(ParseDimacs, Errors) {
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 5 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("1 2 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 2\n1 2 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 x 0\n"), ParseError);
  try {
    parse_dimacs("p cnf 2 1\nc\n1 7 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ParseDimacs, RoundTrip) {
  for (const CnfFormula& f : gen_cnf_corpus(30, 6, 8, 3)) EXPECT_EQ(parse_dimacs(f.to_dimacs()), f);
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize_to_3cnf(CnfFormula(1, {{1}})).clauses(), (std::vector<Clause>{{1, 1, 1}}));
  EXPECT_EQ(normalize_to_3cnf(CnfFormula(3, {{1, -2, 3}})).clauses(), (std::vector<Clause>{{1, -2, 3}}));
  EXPECT_EQ(normalize_to_3cnf(CnfFormula(2, {{1, -2}})).clauses(), (std::vector<Clause>{{1, -2, -2}}));
  EXPECT_THROW(normalize_to_3cnf(CnfFormula(4, {{1, 2, 3, 4}})), RefusalError);
}

TEST(Normalize, PreservesSatisfyingSet) {
  gen::Engine rng(12);
  for (int iter = 0; iter < 150; ++iter) {
    const CnfFormula f = gen::cnf(rng, 10, 8);
    if (f.has_empty_clause()) continue;
    const CnfFormula g = normalize_to_3cnf(f);
    ASSERT_EQ(g.variable_count(), f.variable_count());
    ASSERT_EQ(g.decision_variable(), f.decision_variable());
    ASSERT_EQ(g.max_clause_width(), g.clause_count() ? 3u : 0u);
    ASSERT_EQ(oracle::all_satisfying(g), oracle::all_satisfying(f)) << f.str();
  }
}

TEST(Normalize, SplitModeKeepsOriginalProjection) {
  gen::Engine rng(13);
  for (int iter = 0; iter < 60; ++iter) {
    const CnfFormula f = gen::cnf(rng, 6, 5, 6);
    if (f.has_empty_clause()) continue;
    const CnfFormula g = normalize_to_3cnf(f, WideClauseMode::split);
    ASSERT_EQ(g.decision_variable(), f.variable_count());
    std::vector<std::string> projected;
    for (const auto& a : oracle::all_satisfying(g)) projected.push_back(a.substr(0, f.variable_count()));
    projected.erase(std::unique(projected.begin(), projected.end()), projected.end());
    ASSERT_EQ(projected, oracle::all_satisfying(f)) << f.str();
  }
}

TEST(Satisfies, Examples) {
  EXPECT_TRUE(satisfies(CnfFormula(2, {{1, 2, 2}}), TFAssignment::parse("12")));
  EXPECT_FALSE(satisfies(CnfFormula(1, {{-1, -1, -1}}), TFAssignment::parse("1")));
  EXPECT_TRUE(satisfies(CnfFormula(0, {}), TFAssignment::parse("")));
  EXPECT_THROW(satisfies(CnfFormula(2, {{1}}), TFAssignment::parse("1")), UsageError);
}

TEST(LfSat, Examples) {
  EXPECT_EQ(lf_str(CnfFormula(1, {{1, 1, 1}})), "1");
  EXPECT_EQ(lf_str(CnfFormula(2, {{-1, -1, -1}, {1, 2, 2}})), "21");
  EXPECT_EQ(lf_str(CnfFormula(1, {{1}, {-1}})), "UNSAT");
  EXPECT_EQ(lf_str(CnfFormula(0, {})), "");
  EXPECT_EQ(lf_str(CnfFormula(2, {{}})), "UNSAT");
}

TEST(LfSat, MatchesExhaustiveOracle) {
  gen::Engine rng(14);
  for (int iter = 0; iter < 300; ++iter) {
    const CnfFormula f = gen::cnf(rng, 12, 30);
    ASSERT_EQ(lf_str(f), oracle::lf_sat(f).value_or("UNSAT")) << f.str();
  }
}

TEST(LfSat, EnumerationMatchesOracle) {
  gen::Engine rng(15);
  for (int iter = 0; iter < 100; ++iter) {
    const CnfFormula f = gen::cnf(rng, 8, 12);
    std::vector<std::string> listed;
    for (const auto& a : enumerate_satisfying(f, 1u << 12)) listed.push_back(a.str());
    ASSERT_EQ(listed, oracle::all_satisfying(f));
  }
  EXPECT_THROW(enumerate_satisfying(CnfFormula(20, {}), 1000), RefusalError);
}

TEST(LfSat, EachPrefixIsTheLeastExtendablePrefix) {
  gen::Engine rng(16);
  for (int iter = 0; iter < 120; ++iter) {
    const CnfFormula f = gen::cnf(rng, 8, 10);
    const auto lf = oracle::lf_sat(f);
    if (!lf) continue;
    const auto all = oracle::all_satisfying(f);
    for (std::size_t i = 0; i <= lf->size(); ++i) {
      // all is sorted, so the first element carries the least extendable prefix.
      ASSERT_EQ(all.front().substr(0, i), lf->substr(0, i));
      std::vector<std::uint8_t> prefix;
      for (std::size_t j = 0; j < i; ++j) prefix.push_back(static_cast<std::uint8_t>((*lf)[j] - '0'));
      const auto forced = lf_sat_assignment_with_prefix(f, prefix);
      ASSERT_TRUE(forced);
      ASSERT_EQ(forced->str(), *lf);
    }
  }
}

TEST(LfSat, ForcedPrefixMatchesFilteredOracle) {
  gen::Engine rng(17);
  for (int iter = 0; iter < 120; ++iter) {
    const CnfFormula f = gen::cnf(rng, 7, 9);
    const std::string p = gen::string_over(rng, "12", gen::uniform(rng, 0, f.variable_count()));
    std::optional<std::string> expected;
    for (const auto& a : oracle::all_satisfying(f)) {
      if (a.compare(0, p.size(), p) == 0) {
        expected = a;
        break;
      }
    }
    std::vector<std::uint8_t> prefix;
    for (char c : p) prefix.push_back(static_cast<std::uint8_t>(c - '0'));
    const auto got = lf_sat_assignment_with_prefix(f, prefix);
    ASSERT_EQ(got.has_value(), expected.has_value());
    if (got) {
      ASSERT_EQ(got->str(), *expected);
    }
  }
}

TEST(OddMinSat, Examples) {
  EXPECT_EQ(decide_odd_min_sat(CnfFormula(2, {{-1, -1, -1}, {1, 2, 2}})), OddMinSat::member);
  EXPECT_EQ(decide_odd_min_sat(CnfFormula(2, {{-2, -2, -2}})), OddMinSat::nonmember);
  EXPECT_EQ(decide_odd_min_sat(CnfFormula(1, {{1}, {-1}})), OddMinSat::nonmember);
}

TEST(OddMinSat, MatchesOracle) {
  gen::Engine rng(18);
  for (int iter = 0; iter < 300; ++iter) {
    const CnfFormula f = gen::cnf(rng, 10, 20);
    ASSERT_EQ(decide_odd_min_sat(f) == OddMinSat::member, oracle::odd_min_sat(f)) << f.str();
  }
}

TEST(Dpll, AgreesWithOracleAndModelsSatisfy) {
  gen::Engine rng(19);
  for (int iter = 0; iter < 300; ++iter) {
    const CnfFormula f = gen::cnf(rng, 12, 40);
    const auto model = dpll_solve(f);
    ASSERT_EQ(model.has_value(), oracle::lf_sat(f).has_value()) << f.str();
    if (model) {
      ASSERT_TRUE(satisfies(f, TFAssignment::from_bools(*model)));
    }
  }
}

TEST(Dpll, PigeonholeIsUnsatisfiable) {
  for (int holes = 1; holes <= 5; ++holes) {
    const int pigeons = holes + 1;
    const auto x = [&](int p, int h) { return static_cast<Literal>(p * holes + h + 1); };
    std::vector<Clause> clauses;
    for (int p = 0; p < pigeons; ++p) {
      Clause c;
      for (int h = 0; h < holes; ++h) c.push_back(x(p, h));
      clauses.push_back(c);
    }
    for (int h = 0; h < holes; ++h) {
      for (int p = 0; p < pigeons; ++p) {
        for (int q = p + 1; q < pigeons; ++q) clauses.push_back({-x(p, h), -x(q, h)});
      }
    }
    EXPECT_FALSE(dpll_solve(CnfFormula(static_cast<std::size_t>(pigeons * holes), clauses))) << holes;
    clauses.erase(clauses.begin());
    const auto model = dpll_solve(CnfFormula(static_cast<std::size_t>(pigeons * holes), clauses));
    ASSERT_TRUE(model) << holes;
    EXPECT_TRUE(satisfies(CnfFormula(static_cast<std::size_t>(pigeons * holes), clauses), TFAssignment::from_bools(*model)));
  }
}

TEST(Dpll, DenseFormulasMatchOracle) {
  gen::Engine rng(20);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = gen::uniform(rng, 8, 14);
    std::vector<Clause> clauses;
    const std::size_t z = gen::uniform(rng, 3 * n, 6 * n);
    for (std::size_t i = 0; i < z; ++i) {
      Clause c;
      for (int j = 0; j < 3; ++j) {
        const auto v = static_cast<Literal>(gen::uniform(rng, 1, n));
        c.push_back(gen::uniform(rng, 0, 1) ? v : -v);
      }
      clauses.push_back(c);
    }
    const CnfFormula f(n, clauses);
    const auto model = dpll_solve(f);
    ASSERT_EQ(model.has_value(), oracle::lf_sat(f).has_value()) << f.str();
    if (model) {
      ASSERT_TRUE(satisfies(f, TFAssignment::from_bools(*model)));
    }
  }
}
