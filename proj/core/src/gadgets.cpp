#include "lexfirst/gadgets.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "lexfirst/coloring.hpp"
#include "lexfirst/embedding.hpp"
#include "lexfirst/errors.hpp"

namespace lexfirst {

using nlohmann::json;

std::string_view to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::equality:
      return "equality";
    case GadgetKind::or_gate:
      return "or";
    case GadgetKind::crossover:
      return "crossover";
  }
  return "unknown";
}

std::optional<GadgetKind> parse_gadget_kind(std::string_view text) {
  if (text == "equality") return GadgetKind::equality;
  if (text == "or") return GadgetKind::or_gate;
  if (text == "crossover") return GadgetKind::crossover;
  return std::nullopt;
}

Vertex GadgetSpec::port(const std::string& name) const {
  const auto it = ports.find(name);
  if (it == ports.end()) throw UsageError("gadget has no port named " + name);
  return it->second;
}

namespace {

void check_ports(const GadgetSpec& g, GadgetKind kind, std::initializer_list<const char*> names) {
  if (g.kind != kind) {
    throw UsageError("expected a " + std::string(to_string(kind)) + " gadget, got " + std::string(to_string(g.kind)));
  }
  std::set<Vertex> seen;
  for (const char* name : names) {
    const Vertex v = g.port(name);
    if (v >= g.fragment.vertex_count()) throw UsageError(std::string("port ") + name + " out of range");
    if (!seen.insert(v).second) throw UsageError("gadget ports must be distinct");
  }
}

int shown(std::uint8_t c) { return c + 1; }

}  // namespace

bool ports_share_a_face(const GadgetSpec& g) {
  if (!g.fragment.has_rotation()) return false;
  const auto report = verify_embedding(g.fragment);
  if (!report || !report->planar) return false;
  std::vector<Vertex> ports;
  for (const auto& [name, v] : g.ports) ports.push_back(v);
  if (ports.size() == 1) return true;
  for (const auto& face : trace_faces(g.fragment)) {
    if (std::all_of(ports.begin(), ports.end(), [&](Vertex v) { return face.contains(v); })) return true;
  }
  return false;
}

GadgetVerdict verify_equality_gadget(const GadgetSpec& g, std::uint64_t cap) {
  check_ports(g, GadgetKind::equality, {"IN", "OUT"});
  const Vertex in = g.port("IN");
  const Vertex out = g.port("OUT");
  const auto colorings = enumerate_legal_colorings(g.fragment, 3, cap);
  GadgetVerdict v;
  v.colorings = colorings.size();
  std::array<std::uint64_t, 3> per_in{};
  std::array<std::set<int>, 3> outs;
  for (const auto& c : colorings) {
    ++per_in[c[in]];
    outs[c[in]].insert(shown(c[out]));
    if (c[in] != c[out] && v.failed.empty()) {
      v.failed = "condition (1)";
      v.message = "legal coloring with IN=" + std::to_string(shown(c[in])) + " and OUT=" + std::to_string(shown(c[out]));
      v.witness = c;
    }
  }
  for (int c = 0; c < 3; ++c) {
    v.behavior.push_back({{"in", c + 1}, {"out", outs[c]}, {"extensions", per_in[c]}});
    if (per_in[c] == 0 && v.failed.empty()) {
      v.failed = "condition (2)";
      v.message = "no legal coloring with IN=" + std::to_string(c + 1);
    }
  }
  v.pass = v.failed.empty();
  return v;
}

GadgetVerdict verify_or_gadget(const GadgetSpec& g, std::uint64_t cap) {
  check_ports(g, GadgetKind::or_gate, {"A", "B", "OUT", "T", "F"});
  const Vertex a = g.port("A"), b = g.port("B"), out = g.port("OUT"), t = g.port("T"), f = g.port("F");
  const auto colorings = enumerate_legal_colorings(g.fragment, 3, cap);
  GadgetVerdict v;
  v.colorings = colorings.size();
  // Reported failure is the most severe one: soundness, then palette, then completeness.
  const auto rank = [](const std::string& what) { return what == "soundness" ? 0 : what == "palette" ? 1 : 2; };
  const auto fail = [&](const char* what, std::string msg, std::optional<Coloring> witness) {
    if (!v.failed.empty() && rank(v.failed) <= rank(what)) return;
    v.failed = what;
    v.message = std::move(msg);
    v.witness = std::move(witness);
  };
  // Every ordered choice of distinct T and F colors; the table is reported for T=1, F=2.
  for (std::uint8_t tc = 0; tc < 3; ++tc) {
    for (std::uint8_t fc = 0; fc < 3; ++fc) {
      if (tc == fc) continue;
      const std::uint8_t bc = static_cast<std::uint8_t>(3 - tc - fc);
      const auto name = [&](std::uint8_t c) { return c == tc ? "T" : c == fc ? "F" : "B"; };
      for (const bool a_true : {true, false}) {
        for (const bool b_true : {true, false}) {
          const std::uint8_t ac = a_true ? tc : fc;
          const std::uint8_t bcol = b_true ? tc : fc;
          std::uint64_t extensions = 0;
          std::set<std::string> out_seen;
          bool out_true = false;
          for (const auto& c : colorings) {
            if (c[t] != tc || c[f] != fc || c[a] != ac || c[b] != bcol) continue;
            ++extensions;
            out_seen.insert(name(c[out]));
            if (c[out] == tc) out_true = true;
            const std::string row = std::string(a_true ? "T" : "F") + (b_true ? "T" : "F");
            if (!a_true && !b_true && c[out] != fc) {
              fail("soundness", "FF extension with OUT=" + std::string(name(c[out])), c);
            }
            if (c[out] == bc) fail("palette", row + " extension with OUT on the B color", c);
          }
          if ((a_true || b_true) && !out_true) {
            fail("completeness",
                 std::string("no ") + (a_true ? "T" : "F") + (b_true ? "T" : "F") + " extension with OUT=T",
                 std::nullopt);
          }
          if (tc == 0 && fc == 1) {
            v.behavior.push_back({{"a", a_true ? "T" : "F"},
                                  {"b", b_true ? "T" : "F"},
                                  {"out", out_seen},
                                  {"extensions", extensions}});
          }
        }
      }
    }
  }
  v.pass = v.failed.empty();
  return v;
}

GadgetVerdict verify_crossover_gadget(const GadgetSpec& g, std::uint64_t cap) {
  check_ports(g, GadgetKind::crossover, {"N", "S", "E", "W"});
  const Vertex n = g.port("N"), s = g.port("S"), e = g.port("E"), w = g.port("W");
  const auto colorings = enumerate_legal_colorings(g.fragment, 3, cap);
  GadgetVerdict v;
  v.colorings = colorings.size();
  std::array<std::array<std::uint64_t, 3>, 3> rows{};
  for (const auto& c : colorings) {
    if ((c[n] != c[s] || c[e] != c[w]) && v.failed.empty()) {
      v.failed = "condition (1)";
      v.message = "legal coloring with N,S,E,W = " + std::to_string(shown(c[n])) + "," + std::to_string(shown(c[s])) +
                  "," + std::to_string(shown(c[e])) + "," + std::to_string(shown(c[w]));
      v.witness = c;
    }
    if (c[n] == c[s] && c[e] == c[w]) ++rows[c[n]][c[e]];
  }
  for (int c1 = 0; c1 < 3; ++c1) {
    for (int c2 = 0; c2 < 3; ++c2) {
      v.behavior.push_back({{"ns", c1 + 1}, {"ew", c2 + 1}, {"extensions", rows[c1][c2]}});
      if (rows[c1][c2] == 0 && v.failed.empty()) {
        v.failed = "condition (2)";
        v.message = "no legal coloring with N=S=" + std::to_string(c1 + 1) + " and E=W=" + std::to_string(c2 + 1);
      }
    }
  }
  if (v.failed.empty() && !ports_share_a_face(g)) {
    v.failed = "condition (3)";
    v.message = "fragment is not a planar embedding with all four ports on one face";
  }
  v.pass = v.failed.empty();
  return v;
}

GadgetVerdict verify_gadget(const GadgetSpec& g, std::uint64_t cap) {
  switch (g.kind) {
    case GadgetKind::equality:
      return verify_equality_gadget(g, cap);
    case GadgetKind::or_gate:
      return verify_or_gadget(g, cap);
    case GadgetKind::crossover:
      return verify_crossover_gadget(g, cap);
  }
  throw UsageError("unknown gadget kind");
}

namespace {

GadgetSpec drawn(GadgetKind kind, std::vector<std::string> labels, std::vector<Edge> edges, std::vector<Point> at,
                 std::map<std::string, Vertex> ports) {
  const std::size_t n = labels.size();
  OrderedGraph g(n, std::move(edges), std::move(labels));
  g = g.with_rotation(rotation_from_coordinates(g, at));
  return GadgetSpec{std::move(g), std::move(ports), kind};
}

}  // namespace

GadgetSpec load_gadget(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::equality:
      return drawn(kind, {"IN", "a", "b", "OUT"}, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}},
                   {{0, 0}, {1, 1}, {1, -1}, {2, 0}}, {{"IN", 0}, {"OUT", 3}});
    case GadgetKind::or_gate:
      // r sees T and F, so OUT avoids the B color; a-b-OUT is a triangle.
      return drawn(kind, {"A", "B", "OUT", "T", "F", "a", "b", "r"},
                   {{0, 5}, {1, 6}, {5, 6}, {5, 2}, {6, 2}, {7, 3}, {7, 4}, {7, 2}, {3, 4}},
                   {{0, 0}, {4, 0}, {2, 2}, {1, 4}, {3, 4}, {1, 1}, {3, 1}, {2, 3}},
                   {{"A", 0}, {"B", 1}, {"OUT", 2}, {"T", 3}, {"F", 4}});
    case GadgetKind::crossover:
      return drawn(kind, {"N", "E", "S", "W", "c4", "c5", "c6", "c7", "c8", "c9", "c10", "c11", "c12"},
                   {{0, 6}, {3, 4}, {2, 10}, {1, 12}, {0, 11}, {3, 9},  {2, 5},  {1, 7},
                    {0, 12}, {3, 6}, {2, 4},  {1, 10}, {4, 5},  {7, 10}, {11, 12}, {6, 9},
                    {5, 7},  {7, 11}, {9, 11}, {5, 9},  {5, 8},  {7, 8},  {8, 11}, {8, 9}},
                   {{0, 2}, {2, 0}, {0, -2}, {-2, 0}, {-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 0}, {0, 1}, {1, -1},
                    {1, 0}, {1, 1}},
                   {{"N", crossover_layout::N},
                    {"E", crossover_layout::E},
                    {"S", crossover_layout::S},
                    {"W", crossover_layout::W}});
  }
  throw UsageError("unknown gadget kind");
}

json verdict_to_json(const GadgetSpec& g, const GadgetVerdict& v) {
  json j;
  j["kind"] = std::string(to_string(g.kind));
  j["vertices"] = g.fragment.vertex_count();
  j["edges"] = g.fragment.edge_count();
  j["pass"] = v.pass;
  j["colorings"] = v.colorings;
  j["behavior"] = v.behavior;
  json ports = json::object();
  for (const auto& [name, idx] : g.ports) ports[name] = idx;
  j["ports"] = ports;
  j["ports_share_face"] = ports_share_a_face(g);
  if (!v.pass) {
    j["failed"] = v.failed;
    j["message"] = v.message;
    if (v.witness) j["witness"] = v.witness->str();
  }
  return j;
}

}  // namespace lexfirst
