#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>

#include "lexfirst/coloring.hpp"
#include "lexfirst/embedding.hpp"
#include "lexfirst/errors.hpp"
#include "lexfirst/gadgets.hpp"
#include "lexfirst/reductions.hpp"
#include "lexfirst/sat.hpp"

namespace lexfirst {

using nlohmann::json;

std::string_view to_string(TailOrder order) {
  return order == TailOrder::standard ? "standard" : "palette-last";
}

std::optional<TailOrder> parse_tail_order(std::string_view text) {
  if (text == "standard") return TailOrder::standard;
  if (text == "palette-last") return TailOrder::palette_last;
  return std::nullopt;
}

json SigmaOutput::meta() const {
  return json{{"reduction", "sigma"},
              {"m", m},
              {"n", n},
              {"z", z},
              {"crossings", crossings},
              {"variable_positions", variable_positions},
              {"negative_positions", negative_positions},
              {"palette_positions", palette_positions}};
}

namespace {

using i64 = std::int64_t;
__extension__ typedef __int128 i128;

struct Pt {
  i64 x = 0;
  i64 y = 0;
};

i128 orient(Pt a, Pt b, Pt c) {
  return static_cast<i128>(b.x - a.x) * (c.y - a.y) - static_cast<i128>(b.y - a.y) * (c.x - a.x);
}

int sign(i128 v) { return (v > 0) - (v < 0); }

/// Raised when a layout attempt has a vertex on an edge, overlapping edges, or three
/// edges through one point; the caller retries with other spacing.
struct Degenerate {};

bool strictly_inside(Pt a, Pt b, Pt p) {
  if (orient(a, b, p) != 0) return false;
  const i128 dot = static_cast<i128>(p.x - a.x) * (b.x - a.x) + static_cast<i128>(p.y - a.y) * (b.y - a.y);
  const i128 len = static_cast<i128>(b.x - a.x) * (b.x - a.x) + static_cast<i128>(b.y - a.y) * (b.y - a.y);
  return dot > 0 && dot < len;
}

/// Position along an edge as the fraction num/den with den > 0.
struct Param {
  i128 num;
  i128 den;
  friend bool operator<(const Param& a, const Param& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator==(const Param& a, const Param& b) { return a.num * b.den == b.num * a.den; }
};

Param param_on(Pt p, Pt q, Pt r, Pt s) {
  const auto cross = [](i64 ax, i64 ay, i64 bx, i64 by) { return static_cast<i128>(ax) * by - static_cast<i128>(ay) * bx; };
  i128 num = cross(r.x - p.x, r.y - p.y, s.x - r.x, s.y - r.y);
  i128 den = cross(q.x - p.x, q.y - p.y, s.x - r.x, s.y - r.y);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return {num, den};
}

struct BaseEdge {
  Vertex u;
  Vertex v;
};

struct Crossing {
  std::size_t e1;
  std::size_t e2;
  bool w_toward_u2;
};

/// Port order within the local crossover fragment and the block each port contributes
/// to a merged rotation: its gadget neighbors counterclockwise, starting just after
/// the outer-face corner.
struct CrossoverTemplate {
  GadgetSpec spec;
  std::array<std::vector<Vertex>, 4> port_block;
};

const CrossoverTemplate& crossover_template() {
  static const CrossoverTemplate tpl = [] {
    CrossoverTemplate t{load_gadget(GadgetKind::crossover), {}};
    const auto& g = t.spec.fragment;
    const auto faces = trace_faces(g);
    const Face* outer = nullptr;
    for (const auto& face : faces) {
      bool all = true;
      for (Vertex p = 0; p < 4; ++p) all = all && face.contains(p);
      if (all) {
        if (outer) throw ContractError("crossover fragment has two faces containing every port");
        outer = &face;
      }
    }
    if (!outer) throw ContractError("crossover fragment has no face containing every port");
    for (Vertex p = 0; p < 4; ++p) {
      const auto& darts = outer->darts;
      for (std::size_t i = 0; i < darts.size(); ++i) {
        if (darts[i].to != p) continue;
        const Vertex a = darts[i].from;
        const Vertex b = darts[(i + 1) % darts.size()].to;
        const auto& rot = (*g.rotation())[p];
        const auto start = std::find(rot.begin(), rot.end(), b) - rot.begin();
        std::vector<Vertex> block;
        for (std::size_t k = 0; k < rot.size(); ++k) block.push_back(rot[(start + k) % rot.size()]);
        if (block.back() != a) throw ContractError("crossover port corner is not a single sector");
        t.port_block[p] = std::move(block);
        break;
      }
    }
    return t;
  }();
  return tpl;
}

struct Layout {
  std::vector<std::size_t> pair_order;
  std::vector<bool> negative_first;
  std::vector<std::size_t> clause_order;
};

Vertex literal_vertex(Literal lit, std::size_t n) {
  return lit > 0 ? static_cast<Vertex>(lit - 1) : static_cast<Vertex>(n + static_cast<std::size_t>(-lit) - 1);
}

/// Slot of each literal vertex along the literal row.
std::vector<std::size_t> literal_slots(const Layout& layout, std::size_t n) {
  std::vector<std::size_t> slot(2 * n);
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t var = layout.pair_order[p];
    slot[var] = 2 * p + (layout.negative_first[p] ? 1 : 0);
    slot[n + var] = 2 * p + (layout.negative_first[p] ? 0 : 1);
  }
  return slot;
}

constexpr std::array<i64, 3> kPortOffset{0, 2, 5};  // a1, b1, b2
constexpr i64 kClausePitch = 20;

/// Literals of clause j assigned to its a1, b1, b2 ports, leftmost literal first.
std::array<Literal, 3> port_literals(const Clause& c, const std::vector<std::size_t>& slot, std::size_t n) {
  std::array<Literal, 3> lits{c[0], c[1], c[2]};
  std::stable_sort(lits.begin(), lits.end(),
                   [&](Literal a, Literal b) { return slot[literal_vertex(a, n)] < slot[literal_vertex(b, n)]; });
  return lits;
}

std::size_t channel_crossings(const CnfFormula& f, const Layout& layout) {
  const std::size_t n = f.variable_count();
  const auto slot = literal_slots(layout, n);
  std::vector<std::pair<i64, i64>> channels;  // (literal slot, clause port x)
  for (std::size_t pos = 0; pos < layout.clause_order.size(); ++pos) {
    const auto& clause = f.clauses()[layout.clause_order[pos]];
    const auto lits = port_literals(clause, slot, n);
    for (std::size_t k = 0; k < 3; ++k) {
      channels.emplace_back(static_cast<i64>(slot[literal_vertex(lits[k], n)]),
                            static_cast<i64>(pos) * kClausePitch + kPortOffset[k]);
    }
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < channels.size(); ++i) {
    for (std::size_t j = i + 1; j < channels.size(); ++j) {
      if ((channels[i].first - channels[j].first) * (channels[i].second - channels[j].second) < 0) ++count;
    }
  }
  return count;
}

/// Exhaustive over variable-pair order, pair orientation and clause order when small;
/// identity otherwise. Ties keep the first layout in enumeration order.
Layout choose_layout(const CnfFormula& f) {
  const std::size_t n = f.variable_count();
  const std::size_t z = f.clause_count();
  Layout id;
  id.pair_order.resize(n);
  std::iota(id.pair_order.begin(), id.pair_order.end(), 0);
  id.negative_first.assign(n, false);
  id.clause_order.resize(z);
  std::iota(id.clause_order.begin(), id.clause_order.end(), 0);
  if (n > 5 || z > 5) return id;

  Layout best = id;
  std::size_t best_count = channel_crossings(f, id);
  Layout cur = id;
  do {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      for (std::size_t i = 0; i < n; ++i) cur.negative_first[i] = (mask >> i) & 1;
      std::iota(cur.clause_order.begin(), cur.clause_order.end(), 0);
      do {
        const std::size_t c = channel_crossings(f, cur);
        if (c < best_count) {
          best_count = c;
          best = cur;
        }
        if (best_count == 0) return best;
      } while (std::next_permutation(cur.clause_order.begin(), cur.clause_order.end()));
    }
  } while (std::next_permutation(cur.pair_order.begin(), cur.pair_order.end()));
  return best;
}

struct Built {
  OrderedGraph graph;
  std::size_t crossings;
  std::map<Vertex, Vertex> wire_source;
};

/// Literal slot s sits at x = s * pitch + bend * s^2. A nonzero bend breaks the
/// evenly spaced rows under which three channels can meet in one point.
Built build(const CnfFormula& f, const Layout& layout, i64 literal_pitch, i64 bend) {
  const std::size_t n = f.variable_count();
  const std::size_t z = f.clause_count();
  const Vertex B = 2 * n, T = 2 * n + 1, F = 2 * n + 2;
  const std::size_t base = 2 * n + 3 + 5 * z;
  const auto clause_vertex = [&](std::size_t j, std::size_t which) { return static_cast<Vertex>(2 * n + 3 + 5 * j + which); };
  enum { a1, b1, o1, a2, b2 };

  // Geometry, all integer.
  const auto slot = literal_slots(layout, n);
  const auto literal_x = [&](std::size_t s) {
    const auto si = static_cast<i64>(s);
    return si * literal_pitch + bend * si * si;
  };
  const i64 literal_span = n ? literal_x(2 * n - 1) : 0;
  const i64 clause_span = z ? static_cast<i64>(z - 1) * kClausePitch + 5 : 0;
  const i64 literal_shift = std::max<i64>(0, (clause_span - literal_span) / 2);
  const i64 clause_shift = std::max<i64>(0, (literal_span - clause_span) / 2);
  std::vector<Pt> at(base);
  for (std::size_t v = 0; v < 2 * n; ++v) at[v] = {literal_shift + literal_x(slot[v]), 0};
  std::vector<std::size_t> clause_pos(z);
  for (std::size_t pos = 0; pos < z; ++pos) clause_pos[layout.clause_order[pos]] = pos;
  for (std::size_t j = 0; j < z; ++j) {
    const i64 c = clause_shift + static_cast<i64>(clause_pos[j]) * kClausePitch;
    at[clause_vertex(j, a1)] = {c, -12};
    at[clause_vertex(j, b1)] = {c + 2, -12};
    at[clause_vertex(j, o1)] = {c + 1, -14};
    at[clause_vertex(j, a2)] = {c + 3, -16};
    at[clause_vertex(j, b2)] = {c + 5, -12};
  }
  at[B] = {-12, 6};
  at[T] = {-20, -100000};
  at[F] = {-40, -50000};

  std::vector<BaseEdge> edges;
  std::vector<std::string> labels(base);
  std::map<Vertex, VertexRole> roles;
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = "x" + std::to_string(i + 1);
    labels[n + i] = "~x" + std::to_string(i + 1);
    roles[i] = VertexRole::variable_positive;
    roles[n + i] = VertexRole::variable_negative;
    edges.push_back({i, n + i});
    edges.push_back({i, B});
    edges.push_back({n + i, B});
  }
  labels[B] = "B";
  labels[T] = "T";
  labels[F] = "F";
  roles[B] = VertexRole::palette_b;
  roles[T] = VertexRole::palette_t;
  roles[F] = VertexRole::palette_f;
  edges.push_back({B, T});
  edges.push_back({T, F});
  edges.push_back({F, B});
  static constexpr std::array<const char*, 5> kClauseNames{"a1", "b1", "o1", "a2", "b2"};
  for (std::size_t j = 0; j < z; ++j) {
    for (std::size_t w = 0; w < 5; ++w) {
      labels[clause_vertex(j, w)] = "c" + std::to_string(j + 1) + "." + kClauseNames[w];
      roles[clause_vertex(j, w)] = VertexRole::clause_internal;
    }
    const auto cv = [&](std::size_t w) { return clause_vertex(j, w); };
    edges.push_back({cv(a1), cv(b1)});
    edges.push_back({cv(a1), cv(o1)});
    edges.push_back({cv(b1), cv(o1)});
    edges.push_back({cv(o1), cv(a2)});
    edges.push_back({cv(a2), cv(b2)});
    edges.push_back({cv(a2), T});
    edges.push_back({cv(b2), T});
    const auto lits = port_literals(f.clauses()[j], slot, n);
    edges.push_back({literal_vertex(lits[0], n), cv(a1)});
    edges.push_back({literal_vertex(lits[1], n), cv(b1)});
    edges.push_back({literal_vertex(lits[2], n), cv(b2)});
  }

  // Degeneracies and crossings.
  for (const auto& e : edges) {
    for (Vertex p = 0; p < base; ++p) {
      if (p != e.u && p != e.v && strictly_inside(at[e.u], at[e.v], at[p])) throw Degenerate{};
    }
  }
  std::vector<Crossing> crossings;
  std::vector<std::vector<std::pair<Param, std::size_t>>> along(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [p, q] = std::pair{at[edges[i].u], at[edges[i].v]};
      const auto [r, s] = std::pair{at[edges[j].u], at[edges[j].v]};
      const bool shared = edges[i].u == edges[j].u || edges[i].u == edges[j].v || edges[i].v == edges[j].u ||
                          edges[i].v == edges[j].v;
      const int o1 = sign(orient(p, q, r)), o2 = sign(orient(p, q, s));
      const int o3 = sign(orient(r, s, p)), o4 = sign(orient(r, s, q));
      if (o1 == 0 && o2 == 0) {
        if (shared) {
          // Collinear with a common endpoint: overlapping unless they leave in opposite directions.
          const Vertex common = (edges[i].u == edges[j].u || edges[i].u == edges[j].v) ? edges[i].u : edges[i].v;
          const Vertex oi = common == edges[i].u ? edges[i].v : edges[i].u;
          const Vertex oj = (common == edges[j].u) ? edges[j].v : edges[j].u;
          const i128 dot = static_cast<i128>(at[oi].x - at[common].x) * (at[oj].x - at[common].x) +
                           static_cast<i128>(at[oi].y - at[common].y) * (at[oj].y - at[common].y);
          if (dot > 0) throw Degenerate{};
        }
        continue;
      }
      if (shared) continue;
      if (o1 * o2 < 0 && o3 * o4 < 0) {
        const std::size_t idx = crossings.size();
        crossings.push_back({i, j, orient(at[edges[i].v], at[edges[i].u], at[edges[j].u]) > 0});
        along[i].emplace_back(param_on(p, q, r, s), idx);
        along[j].emplace_back(param_on(r, s, p, q), idx);
      }
    }
  }
  for (auto& list : along) {
    std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 1; k < list.size(); ++k) {
      if (list[k].first == list[k - 1].first) throw Degenerate{};
    }
  }

  // Vertex allocation: wires per crossed edge, then crossover interiors per crossing.
  std::size_t next = base;
  std::vector<std::vector<Vertex>> wire(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (std::size_t k = 0; k < along[e].size(); ++k) {
      wire[e].push_back(next);
      labels.push_back("w" + std::to_string(e) + "." + std::to_string(k));
      roles[next] = VertexRole::wire;
      ++next;
    }
  }
  const auto& tpl = crossover_template();
  const std::size_t interior = tpl.spec.fragment.vertex_count() - 4;
  std::vector<Vertex> interior_start(crossings.size());
  for (std::size_t x = 0; x < crossings.size(); ++x) {
    interior_start[x] = next;
    for (std::size_t k = 0; k < interior; ++k) {
      labels.push_back("X" + std::to_string(x) + "." + tpl.spec.fragment.label(4 + k));
      roles[next] = VertexRole::crossover;
      ++next;
    }
  }
  const std::size_t total = next;

  // Which local port each edge side occupies at each crossing, and the vertex bound to it.
  const auto position = [&](std::size_t e, std::size_t x) {
    for (std::size_t k = 0; k < along[e].size(); ++k) {
      if (along[e][k].second == x) return k;
    }
    throw ContractError("crossing not found on its edge");
  };
  const auto role_of = [&](std::size_t x, std::size_t e, bool toward_u) -> Vertex {
    const auto& c = crossings[x];
    if (e == c.e1) return toward_u ? crossover_layout::N : crossover_layout::S;
    const bool w_side = toward_u == c.w_toward_u2;
    return w_side ? crossover_layout::W : crossover_layout::E;
  };
  const auto port_vertex = [&](std::size_t x, Vertex local) -> Vertex {
    const auto& c = crossings[x];
    for (std::size_t e : {c.e1, c.e2}) {
      const std::size_t k = position(e, x);
      if (role_of(x, e, true) == local) return k == 0 ? edges[e].u : wire[e][k - 1];
      if (role_of(x, e, false) == local) return wire[e][k];
    }
    throw ContractError("unbound crossover port");
  };
  const auto global = [&](std::size_t x, Vertex local) -> Vertex {
    return local < 4 ? port_vertex(x, local) : interior_start[x] + (local - 4);
  };
  const auto block = [&](std::size_t x, Vertex local_port) {
    std::vector<Vertex> out;
    for (Vertex w : tpl.port_block[local_port]) out.push_back(global(x, w));
    return out;
  };

  // Rotation: the straight-line rotation at base vertices with crossed edges replaced.
  std::vector<Edge> base_edges;
  std::map<std::pair<Vertex, Vertex>, std::size_t> edge_id;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    base_edges.emplace_back(edges[e].u, edges[e].v);
    edge_id[{edges[e].u, edges[e].v}] = e;
    edge_id[{edges[e].v, edges[e].u}] = e;
  }
  std::vector<Point> drawn(base);
  for (Vertex v = 0; v < base; ++v) drawn[v] = {static_cast<double>(at[v].x), static_cast<double>(at[v].y)};
  const OrderedGraph g0(base, base_edges);
  const Rotation rot0 = rotation_from_coordinates(g0, drawn);

  Rotation rot(total);
  for (Vertex v = 0; v < base; ++v) {
    for (Vertex w : rot0[v]) {
      const std::size_t e = edge_id.at({v, w});
      if (along[e].empty()) {
        rot[v].push_back(w);
      } else if (v == edges[e].u) {
        const std::size_t x = along[e].front().second;
        const auto b = block(x, role_of(x, e, true));
        rot[v].insert(rot[v].end(), b.begin(), b.end());
      } else {
        rot[v].push_back(wire[e].back());
      }
    }
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::size_t k = along[e].size();
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t x = along[e][j].second;
      auto r = block(x, role_of(x, e, false));
      if (j + 1 < k) {
        const std::size_t y = along[e][j + 1].second;
        const auto b = block(y, role_of(y, e, true));
        r.insert(r.end(), b.begin(), b.end());
      } else {
        r.push_back(edges[e].v);
      }
      rot[wire[e][j]] = std::move(r);
    }
  }
  const auto& local_rot = *tpl.spec.fragment.rotation();
  for (std::size_t x = 0; x < crossings.size(); ++x) {
    for (Vertex local = 4; local < local_rot.size(); ++local) {
      auto& r = rot[global(x, local)];
      for (Vertex w : local_rot[local]) r.push_back(global(x, w));
    }
  }

  std::vector<Edge> all_edges;
  for (Vertex v = 0; v < total; ++v) {
    for (Vertex w : rot[v]) {
      if (v < w) all_edges.emplace_back(v, w);
    }
  }
  OrderedGraph g(total, std::move(all_edges), std::move(labels), std::move(rot), std::move(roles));
  const auto report = verify_embedding(g);
  if (!report || !report->planar) throw ContractError("sigma produced a non-planar rotation system");
  std::map<Vertex, Vertex> wire_source;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (Vertex w : wire[e]) wire_source[w] = edges[e].u;
  }
  return {std::move(g), crossings.size(), std::move(wire_source)};
}

}  // namespace

SigmaOutput sigma(const CnfFormula& f, const SigmaOptions& options) {
  for (std::size_t i = 0; i < f.clause_count(); ++i) {
    if (f.clauses()[i].size() != 3) {
      throw UsageError("sigma needs exactly three literals per clause; clause " + std::to_string(i + 1) + " has " +
                       std::to_string(f.clauses()[i].size()));
    }
  }
  const std::size_t n = f.variable_count();
  const Layout layout = choose_layout(f);
  std::optional<Built> built;
  for (i64 attempt = 0; attempt < 64 && !built; ++attempt) {
    try {
      built = build(f, layout, 8 + attempt / 4, attempt % 4);
    } catch (const Degenerate&) {
    }
  }
  if (!built) throw ContractError("no non-degenerate layout found for sigma");

  SigmaOutput out;
  out.n = n;
  out.z = f.clause_count();
  out.m = built->graph.vertex_count();
  out.crossings = built->crossings;
  out.formula = f;
  const std::size_t m = out.m;
  std::vector<Vertex> order(m);
  std::iota(order.begin(), order.end(), 0);
  if (options.tail == TailOrder::palette_last) {
    order.clear();
    for (Vertex v = 0; v < 2 * n; ++v) order.push_back(v);
    for (Vertex v = 2 * n + 3; v < m; ++v) order.push_back(v);
    for (Vertex v = 2 * n; v < 2 * n + 3; ++v) order.push_back(v);
  }
  out.graph = built->graph.permuted(order);
  std::vector<Vertex> where(m);
  for (Vertex i = 0; i < m; ++i) where[order[i]] = i;
  for (Vertex i = 0; i < n; ++i) {
    out.variable_positions.push_back(where[i]);
    out.negative_positions.push_back(where[n + i]);
  }
  for (Vertex p = 2 * n; p < 2 * n + 3; ++p) out.palette_positions.push_back(where[p]);
  for (const auto& [w, u] : built->wire_source) out.wire_source[where[w]] = where[u];
  return out;
}

namespace {

/// Lex-first completion of each connected group of free vertices, groups taken in
/// order of their first vertex. `adj` holds the constraints; color 0 marks free.
bool complete_groups(std::vector<std::uint8_t>& color, const std::vector<bool>& free,
                     const std::vector<std::vector<Vertex>>& adj) {
  const std::size_t m = color.size();
  std::vector<bool> seen(m, false);
  for (Vertex start = 0; start < m; ++start) {
    if (!free[start] || seen[start]) continue;
    std::vector<Vertex> group{start};
    seen[start] = true;
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (Vertex w : adj[group[i]]) {
        if (free[w] && !seen[w]) {
          seen[w] = true;
          group.push_back(w);
        }
      }
    }
    if (group.size() > 16) throw ContractError("sigma completion group of " + std::to_string(group.size()) + " vertices");
    std::sort(group.begin(), group.end());
    std::size_t i = 0;
    while (i < group.size()) {
      auto& c = color[group[i]];
      bool placed = false;
      while (c < 3) {
        ++c;
        if (std::none_of(adj[group[i]].begin(), adj[group[i]].end(), [&](Vertex w) { return color[w] == c; })) {
          placed = true;
          break;
        }
      }
      if (placed) {
        ++i;
        continue;
      }
      c = 0;
      if (i == 0) return false;
      --i;
    }
  }
  return true;
}

}  // namespace

Coloring sigma_color_from_assignment(const SigmaOutput& out, const TFAssignment& alpha) {
  if (alpha.size() != out.n) throw UsageError("assignment length differs from the variable count");
  if (!satisfies(out.formula, alpha)) throw ContractError("assignment " + alpha.str() + " does not satisfy the formula");
  const OrderedGraph& g = out.graph;
  const std::size_t m = out.m;
  std::vector<std::uint8_t> color(m, 0);
  for (std::size_t i = 0; i < out.n; ++i) {
    const bool value = alpha.is_true(i);
    color[out.variable_positions[i]] = value ? 1 : 2;
    color[out.negative_positions[i]] = value ? 2 : 1;
  }
  color[out.b()] = 3;
  color[out.t()] = 1;
  color[out.f()] = 2;

  const auto interior = [&](Vertex v) { return g.role(v) == VertexRole::crossover; };
  const auto source = [&](Vertex v) {
    const auto it = out.wire_source.find(v);
    return it == out.wire_source.end() ? v : it->second;
  };
  // Stage 1: gadget vertices against the uncrossed constraints (wires contracted).
  std::vector<std::vector<Vertex>> adj(m);
  std::vector<bool> free(m, false);
  for (const auto& e : g.edges()) {
    if (interior(e.u) || interior(e.v)) continue;
    const Vertex a = source(e.u), b = source(e.v);
    if (a == b) throw ContractError("sigma wire closes on its own source");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (Vertex v = 0; v < m; ++v) free[v] = color[v] == 0 && !interior(v) && !out.wire_source.contains(v);
  if (!complete_groups(color, free, adj)) throw ContractError("no legal completion for assignment " + alpha.str());

  // Stage 2: wires, then crossover interiors against the real graph.
  for (const auto& [w, u] : out.wire_source) color[w] = color[u];
  for (Vertex v = 0; v < m; ++v) {
    adj[v] = g.neighbors(v);
    free[v] = interior(v);
  }
  if (!complete_groups(color, free, adj)) throw ContractError("no legal completion for assignment " + alpha.str());

  Coloring c(4, color);
  if (!is_legal_coloring(g, c)) throw ContractError("sigma completion is not a legal coloring");
  return c;
}

}  // namespace lexfirst
