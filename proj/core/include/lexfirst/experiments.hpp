#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "lexfirst/cnf.hpp"
#include "lexfirst/graph.hpp"
#include "lexfirst/reductions.hpp"
#include "lexfirst/report.hpp"
#include "lexfirst/selfred_families.hpp"

namespace lexfirst {

/// Largest n and z accepted for experiments that run the full SAT-to-coloring pipeline.
inline constexpr std::size_t kPipelineVariableCap = 8;
inline constexpr std::size_t kPipelineClauseCap = 8;

struct Eq1Options {
  /// Decomposition is checked for 3-colorable graphs with at most this many vertices.
  std::size_t decomposition_m_max = 7;
  /// Candidate strings the exhaustive scan may visit per graph.
  std::uint64_t scan_cap = std::uint64_t{1} << 26;
};

/// Seeded planar graphs followed by the fixed set.
std::vector<OrderedGraph> eq1_corpus(std::uint64_t seed, std::size_t count = 200, std::size_t n_max = 7);

/// 3-colorability (DSATUR search) against the pattern 0^m{1,2,3}^m on the
/// chronological LF of rho4(G); for 3-colorable graphs also LF(rho4(G)) =
/// 0^m LF(G over {1,2,3}) against a plain scan of all strings in lex order.
ExperimentReport verify_eq1(const std::vector<OrderedGraph>& corpus, std::uint64_t seed = 0,
                            const Eq1Options& options = {});

/// First string in lex order over {0..k-1}^n that is a legal coloring, by scanning
/// candidates one at a time; nullopt when none exists. Refuses past `cap` candidates.
std::optional<Coloring> first_legal_by_scan(const OrderedGraph& g, int k, std::uint64_t cap);

/// Width-3 corpus under the pipeline caps; refuses larger bounds.
std::vector<CnfFormula> pipeline_corpus(std::uint64_t seed, std::size_t count = 100, std::size_t n_max = 4,
                                        std::size_t z_max = 4);

/// Property (i) with satisfiability by enumeration against DSATUR and DPLL on the
/// coloring encoding; property (ii) for every satisfying assignment; planarity.
ExperimentReport verify_sigma_properties(const std::vector<CnfFormula>& corpus, std::uint64_t seed = 0,
                                         const SigmaOptions& options = {}, std::uint64_t cap = std::uint64_t{1} << 16);

/// Odd-Min-SAT membership against the (m+n)-th symbol pattern on LF(rho4(sigma(F))).
/// Disagreements are data (not gated) and carry a clause-minimized bundle.
ExperimentReport verify_thm23(const std::vector<CnfFormula>& corpus, std::uint64_t seed = 0,
                              const SigmaOptions& options = {});

/// Folds a sigma-properties report into a thm23 report: stats under "sigma" and one
/// hard failure when the properties do not all hold.
void attach_sigma_properties(ExperimentReport& thm23, const ExperimentReport& sigma);

struct SelfredOptions {
  std::size_t check_count = 50;
  std::size_t check_n_max = 6;
  std::size_t prefix_count = 100;
  std::size_t prefix_n_max = 10;
  std::uint64_t cap = kSolutionCap;
};

/// The SAT self-reduction checked on one corpus, and prefix search against
/// brute-force LF on a second.
ExperimentReport verify_selfred(std::uint64_t seed, const SelfredOptions& options = {});

struct Thm35Options {
  std::vector<DChoice> d = {DChoice::all, DChoice::prefix1};
  std::size_t toy_length = 8;
  std::size_t count = 100;
  std::size_t n_max = 8;
  std::uint64_t cap = kSolutionCap;
};

/// Per D choice: the toy family exhaustively and the SAT family on a seeded corpus
/// plus hand-picked formulas outside the restricted D.
ExperimentReport verify_theorem35(std::uint64_t seed, const Thm35Options& options = {});

/// The three built-in gadgets.
ExperimentReport verify_gadget_suite();

struct PVariantOptions {
  std::size_t count = 100;
  std::size_t n_max = 12;
};

/// Each LF solver against the minimum of a full enumeration, plus the embedded
/// witness on member instances.
ExperimentReport verify_pvariants(std::uint64_t seed, const PVariantOptions& options = {});

/// {"seed", "passed", "sections": {eq1, thm23, thm35, selfred, gadgets}}.
nlohmann::json verify_all(std::uint64_t seed);

}  // namespace lexfirst
