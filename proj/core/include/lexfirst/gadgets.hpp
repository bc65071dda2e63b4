#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "lexfirst/graph.hpp"
#include "lexfirst/strings.hpp"

namespace lexfirst {

enum class GadgetKind { equality, or_gate, crossover };

std::string_view to_string(GadgetKind kind);
std::optional<GadgetKind> parse_gadget_kind(std::string_view text);

/// A 3-coloring fragment with named ports.
///
/// Port names: equality IN, OUT; or A, B, OUT, T, F; crossover N, S, E, W.
struct GadgetSpec {
  OrderedGraph fragment;
  std::map<std::string, Vertex> ports;
  GadgetKind kind = GadgetKind::equality;

  Vertex port(const std::string& name) const;
};

/// Outcome of an exhaustive gadget check. Colors in tables and messages are 1..3.
struct GadgetVerdict {
  bool pass = false;
  /// Empty on pass, otherwise e.g. "condition (1)" or "soundness".
  std::string failed;
  std::string message;
  /// A legal coloring (digits 0..2) exhibiting the failure, when one exists.
  std::optional<Coloring> witness;
  nlohmann::json behavior = nlohmann::json::array();
  std::uint64_t colorings = 0;
};

inline constexpr std::uint64_t kGadgetEnumerationCap = 43046721;  // 3^16

GadgetVerdict verify_equality_gadget(const GadgetSpec& g, std::uint64_t cap = kGadgetEnumerationCap);
GadgetVerdict verify_or_gadget(const GadgetSpec& g, std::uint64_t cap = kGadgetEnumerationCap);
GadgetVerdict verify_crossover_gadget(const GadgetSpec& g, std::uint64_t cap = kGadgetEnumerationCap);
GadgetVerdict verify_gadget(const GadgetSpec& g, std::uint64_t cap = kGadgetEnumerationCap);

/// Whether some face of the fragment's rotation system contains every port.
bool ports_share_a_face(const GadgetSpec& g);

GadgetSpec load_gadget(GadgetKind kind);

nlohmann::json verdict_to_json(const GadgetSpec& g, const GadgetVerdict& v);

/// Crossover drawing: ports N, E, S, W are vertices 0..3 on the outer face, in
/// counterclockwise order N, W, S, E.
namespace crossover_layout {
inline constexpr Vertex N = 0;
inline constexpr Vertex E = 1;
inline constexpr Vertex S = 2;
inline constexpr Vertex W = 3;
inline constexpr std::size_t size = 13;
}  // namespace crossover_layout

}  // namespace lexfirst
