#include <benchmark/benchmark.h>

#include "lexfirst/coloring.hpp"
#include "lexfirst/corpus.hpp"
#include "lexfirst/experiments.hpp"
#include "lexfirst/reductions.hpp"
#include "lexfirst/sat.hpp"
#include "lexfirst/selfred.hpp"
#include "lexfirst/selfred_families.hpp"

using namespace lexfirst;

namespace {

const std::vector<OrderedGraph>& planar_graphs() {
  static const auto graphs = gen_planar_corpus(40, 12, 7);
  return graphs;
}

const std::vector<CnfFormula>& formulas() {
  static const auto fs = gen_cnf_corpus(20, 8, 8, 7);
  return fs;
}

void BM_LfColoringPlanar(benchmark::State& state) {
  LfOptions o;
  o.strategy = static_cast<SearchStrategy>(state.range(0));
  for (auto _ : state) {
    for (const auto& g : planar_graphs()) benchmark::DoNotOptimize(lf_coloring(g, 3, o));
  }
}
BENCHMARK(BM_LfColoringPlanar)->Arg(0)->Arg(1)->Arg(2);

void BM_LfColoringPipeline(benchmark::State& state) {
  LfOptions o;
  o.strategy = static_cast<SearchStrategy>(state.range(0));
  std::vector<OrderedGraph> graphs;
  for (const auto& f : pipeline_corpus(7, 20, 4, 4)) graphs.push_back(pipeline_t(f).rho.graph);
  for (auto _ : state) {
    for (const auto& g : graphs) benchmark::DoNotOptimize(lf_coloring(g, 4, o));
  }
}
// Only guided search finishes on pipeline graphs in reasonable time.
BENCHMARK(BM_LfColoringPipeline)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Sigma(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& f : formulas()) benchmark::DoNotOptimize(sigma(normalize_to_3cnf(f)));
  }
}
BENCHMARK(BM_Sigma);

void BM_LfSat(benchmark::State& state) {
  const auto fs = gen_cnf_corpus(50, static_cast<std::size_t>(state.range(0)), 3 * state.range(0), 3);
  for (auto _ : state) {
    for (const auto& f : fs) benchmark::DoNotOptimize(lf_sat_assignment(f));
  }
}
BENCHMARK(BM_LfSat)->Arg(10)->Arg(20)->Arg(40);

void BM_PrefixSearch(benchmark::State& state) {
  const auto fs = gen_cnf_corpus(50, static_cast<std::size_t>(state.range(0)), 2 * state.range(0), 5);
  const auto pp = sat_projection();
  const auto sr = sat_self_reduction();
  const MembershipOracle<CnfFormula> dpll = [](const CnfFormula& f) { return dpll_solve(f).has_value(); };
  for (auto _ : state) {
    for (const auto& f : fs) benchmark::DoNotOptimize(prefix_search_lf(f, pp, sr, dpll));
  }
}
BENCHMARK(BM_PrefixSearch)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
