#pragma once

#include <map>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "lexfirst/cnf.hpp"
#include "lexfirst/graph.hpp"
#include "lexfirst/strings.hpp"

namespace lexfirst {

/// Order of the vertices after the variable block.
enum class TailOrder {
  /// negatives, B, T, F, clause interiors, wire and crossover vertices
  standard,
  /// negatives, clause interiors, wire and crossover vertices, then B, T, F
  palette_last,
};

std::string_view to_string(TailOrder order);
std::optional<TailOrder> parse_tail_order(std::string_view text);

struct SigmaOptions {
  TailOrder tail = TailOrder::standard;
};

struct SigmaOutput {
  OrderedGraph graph;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t z = 0;
  std::vector<Vertex> variable_positions;
  /// B, T, F
  std::vector<Vertex> palette_positions;
  std::vector<Vertex> negative_positions;
  std::size_t crossings = 0;
  /// Wire vertex -> the edge endpoint whose color it carries through its crossovers.
  std::map<Vertex, Vertex> wire_source;
  CnfFormula formula;

  Vertex b() const { return palette_positions.at(0); }
  Vertex t() const { return palette_positions.at(1); }
  Vertex f() const { return palette_positions.at(2); }
  nlohmann::json meta() const;
};

/// Planar 3-colorability instance for an exactly-3-literal CNF.
///
/// Literal pairs x_i, ~x_i form triangles with B; each clause is two chained OR
/// triangles whose last stage is tied to T; literal-to-clause edges that cross in the
/// straight-line layout are routed through crossover gadgets. Vertices 0..n-1 are the
/// positive literals.
SigmaOutput sigma(const CnfFormula& f, const SigmaOptions& options = {});

/// The legal coloring over {1,2,3} (T=1, F=2, B=3) with variable i colored alpha_i;
/// the remaining vertices take their lex-first completion. Digits use k = 4.
/// Wires copy their source color (every crossover forces N=S, E=W), so the completion
/// splits into one small search per clause gadget and per crossover interior.
/// Throws ContractError when alpha does not satisfy the formula.
Coloring sigma_color_from_assignment(const SigmaOutput& out, const TFAssignment& alpha);

struct RhoOutput {
  OrderedGraph graph;
  /// Old vertex count.
  std::size_t m = 0;
  /// Colors used by the attached block (k - 3); 1 for rho4.
  std::size_t block = 1;
  int k = 4;
  nlohmann::json meta() const;
};

/// One pendant per old vertex; new vertices take positions 0..m-1, old vertex i moves
/// to m+i.
RhoOutput rho4(const OrderedGraph& g);

/// Clique extension for k = 5 (a triangle per vertex) and k = 6 (a K4 per vertex).
/// Other k raise NotSupportedError.
RhoOutput rho_k(const OrderedGraph& g, int k);

/// Whether an LF k-coloring of rho_k(G) has the shape (0 1 .. k-4)^m {k-3..k-1}^m.
bool rho_pattern_holds(const RhoOutput& rho, const std::string& lf);

struct PipelineOutput {
  SigmaOutput sigma;
  RhoOutput rho;
  nlohmann::json meta() const;
};

/// rho4(sigma(normalize_to_3cnf(f))).
PipelineOutput pipeline_t(const CnfFormula& f, const SigmaOptions& options = {});

/// Membership of an LF 4-coloring string in 0^m w 1 y, w in {1,2}^{n-1}, y in {1,2,3}^{m-n}.
bool thm23_pattern_holds(const std::string& lf, std::size_t m, std::size_t n);

}  // namespace lexfirst
