// Runs every acceptance criterion at its stated scale and time limit.
// Prints one PASS/FAIL line per criterion; exits nonzero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lexfirst/coloring.hpp"
#include "lexfirst/corpus.hpp"
#include "lexfirst/experiments.hpp"
#include "lexfirst/gadgets.hpp"
#include "lexfirst/graph_io.hpp"
#include "lexfirst/reductions.hpp"
#include "lexfirst/report.hpp"
#include "lexfirst/sat.hpp"

using namespace lexfirst;
using nlohmann::json;

namespace {

constexpr std::uint64_t kSeed = 2024;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

bool all_agree(const ExperimentReport& r) {
  return r.consistent() && r.hard_failures.empty() && r.violations.empty() && r.agreements == r.cases;
}

void gadgets(Outcome& o) {
  for (GadgetKind kind : {GadgetKind::equality, GadgetKind::or_gate, GadgetKind::crossover}) {
    const GadgetVerdict v = verify_gadget(load_gadget(kind));
    o.require(v.pass, std::string(to_string(kind)) + " " + v.failed);
    o.detail << " " << to_string(kind) << "=" << v.colorings << " colorings";
  }
}

ExperimentReport eq1_report() {
  static const ExperimentReport r = verify_eq1(eq1_corpus(kSeed), kSeed);
  return r;
}

void pattern_biconditional(Outcome& o) {
  const auto corpus = eq1_corpus(kSeed);
  o.require(corpus.size() >= 200 + fixed_planar_graphs().size(), "corpus size");
  const ExperimentReport r = eq1_report();
  o.require(all_agree(r), "biconditional");
  o.detail << " " << r.agreements << "/" << r.cases << " agree, " << r.stats["three_colorable"] << " 3-colorable";
}

void decomposition(Outcome& o) {
  const ExperimentReport r = eq1_report();
  const std::size_t expected = [] {
    std::size_t n = 0;
    for (const auto& g : eq1_corpus(kSeed)) n += g.vertex_count() <= 7 && is_k_colorable(g, 3);
    return n;
  }();
  o.require(r.stats["decomposition_cases"] == expected, "every 3-colorable graph with m <= 7 checked");
  o.require(r.stats["decomposition_cases"] == r.stats["decomposition_agreements"], "decomposition");
  o.require(r.hard_failures.empty(), "hard failures");
  o.detail << " " << r.stats["decomposition_agreements"] << "/" << r.stats["decomposition_cases"] << " exact";
}

const std::vector<CnfFormula>& formulas() {
  static const std::vector<CnfFormula> f = pipeline_corpus(kSeed, 100, 4, 4);
  return f;
}

void sigma_properties(Outcome& o) {
  const ExperimentReport r = verify_sigma_properties(formulas(), kSeed);
  o.require(formulas().size() >= 100, "corpus size");
  o.require(all_agree(r), "properties (i) and (ii)");
  o.detail << " " << r.agreements << "/" << r.cases << " formulas, " << r.stats["assignments_checked"]
           << " satisfying assignments";
}

void thm23(Outcome& o) {
  const ExperimentReport a = verify_thm23(formulas(), kSeed);
  const ExperimentReport b = verify_thm23(formulas(), kSeed);
  o.require(canonical_dump(a.to_json()) == canonical_dump(b.to_json()), "deterministic");
  o.require(a.consistent() && a.hard_failures.empty(), "both sides computed and legal");
  o.require(a.to_json().contains("agreement_rate"), "agreement rate published");
  for (const auto& v : a.violations) {
    const json& b = v.artifacts;
    const CnfFormula minimized = parse_dimacs(b["minimized"].get<std::string>());
    const OrderedGraph g = graph_from_json(b["graph"]).graph;
    const std::string lf = b["lf_color"];
    const std::size_t m = b["m"];
    const bool legal = g.vertex_count() == lf.size() && is_legal_coloring(g, Coloring::parse(lf, 4));
    const bool same_graph = g == pipeline_t(minimized).rho.graph;
    const bool member = decide_odd_min_sat(minimized) == OddMinSat::member;
    const bool still = member != thm23_pattern_holds(lf, m, minimized.variable_count());
    o.require(legal && same_graph && still, "bundle " + v.instance);
  }
  o.detail << " agreement " << a.agreements << "/" << a.cases << " (not gated), " << a.violations.size()
           << " bundles re-checked";
}

void selfred(Outcome& o) {
  const ExperimentReport r = verify_selfred(kSeed);
  o.require(r.cases >= 150, "corpus sizes");
  o.require(all_agree(r), "no violations, prefix search exact within call bound");
  o.detail << " " << r.agreements << "/" << r.cases << ", max oracle calls " << r.stats["max_oracle_calls"];
}

void theorem35(Outcome& o) {
  const ExperimentReport r = verify_theorem35(kSeed);
  o.require(all_agree(r), "identities and parity");
  o.detail << " " << r.agreements << "/" << r.cases;
}

void pvariants(Outcome& o) {
  const ExperimentReport r = verify_pvariants(kSeed);
  o.require(r.cases >= 300, "corpus sizes");
  o.require(all_agree(r), "LF equals enumeration minimum, witness embedded");
  o.detail << " " << r.agreements << "/" << r.cases;
}

void determinism(Outcome& o) {
  const std::string a = canonical_dump(verify_all(kSeed));
  const std::string b = canonical_dump(verify_all(kSeed));
  o.require(a == b, "byte-identical");
  o.require(json::parse(a)["passed"].get<bool>(), "verify_all passed");
  o.detail << " " << a.size() << " bytes";
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1 gadget contracts", 60, gadgets},
      {"2 colorability pattern biconditional", 300, pattern_biconditional},
      {"3 LF decomposition", 300, decomposition},
      {"4 sigma soundness and completeness", 600, sigma_properties},
      {"5 pipeline parity harness integrity", 1200, thm23},
      {"6 self-reducibility engine", 120, selfred},
      {"7 D = proj(C) identities and parity", 120, theorem35},
      {"8 P-variants", 120, pvariants},
      {"9 determinism", 1200, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& ex) {
      o.require(false, std::string("exception: ") + ex.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(seconds < c.limit_seconds, "time limit");
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.name << " (" << seconds << " s)" << o.detail.str()
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
