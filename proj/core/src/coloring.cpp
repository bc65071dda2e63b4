#include "lexfirst/coloring.hpp"

#include <bit>

#include "lexfirst/coloring_solver.hpp"
#include "lexfirst/errors.hpp"

namespace lexfirst {

namespace {

struct Prepared {
  std::vector<std::uint8_t> palette;
  std::vector<ColorSet> domains;
};

Prepared prepare(const OrderedGraph& g, int k, const LfOptions& options) {
  if (k < 2 || k > 10) throw UsageError("k must lie in [2,10], got " + std::to_string(k));
  Prepared p;
  p.palette = options.palette;
  if (p.palette.empty()) {
    for (int c = 0; c < k; ++c) p.palette.push_back(static_cast<std::uint8_t>(c));
  }
  ColorSet mask = 0;
  for (std::size_t i = 0; i < p.palette.size(); ++i) {
    if (p.palette[i] >= k) throw UsageError("palette color " + std::to_string(p.palette[i]) + " >= k");
    if (i && p.palette[i] <= p.palette[i - 1]) throw UsageError("palette must be strictly ascending");
    mask = static_cast<ColorSet>(mask | (1u << p.palette[i]));
  }
  const std::size_t n = g.vertex_count();
  if (!options.fixed.empty() && options.fixed.size() != n) {
    throw UsageError("fixed-color vector must be empty or have one entry per vertex");
  }
  p.domains.assign(n, mask);
  for (std::size_t v = 0; v < options.fixed.size(); ++v) {
    if (!options.fixed[v]) continue;
    if (*options.fixed[v] >= k) throw UsageError("fixed color >= k at vertex " + std::to_string(v));
    p.domains[v] = static_cast<ColorSet>(1u << *options.fixed[v]);
  }
  return p;
}

std::vector<std::uint8_t> colors_of(ColorSet s) {
  std::vector<std::uint8_t> out;
  for (; s; s = static_cast<ColorSet>(s & (s - 1))) out.push_back(static_cast<std::uint8_t>(std::countr_zero(s)));
  return out;
}

/// Ascending DFS in vertex order; each vertex tries its own domain ascending and is
/// checked only against lower-index neighbors.
std::optional<std::vector<std::uint8_t>> chronological(const OrderedGraph& g, const std::vector<ColorSet>& domains,
                                                       std::uint64_t& nodes) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::uint8_t>> choices(n);
  for (std::size_t v = 0; v < n; ++v) choices[v] = colors_of(domains[v]);
  std::vector<std::uint8_t> color(n, 0);
  std::vector<std::size_t> next(n, 0);
  std::size_t i = 0;
  while (true) {
    if (i == n) return color;
    bool placed = false;
    while (next[i] < choices[i].size()) {
      const std::uint8_t c = choices[i][next[i]++];
      bool ok = true;
      for (Vertex w : g.neighbors(i)) {
        if (w >= i) break;
        if (color[w] == c) {
          ok = false;
          break;
        }
      }
      if (ok) {
        color[i] = c;
        ++nodes;
        placed = true;
        break;
      }
    }
    if (placed) {
      ++i;
      continue;
    }
    next[i] = 0;
    if (i == 0) return std::nullopt;
    --i;
  }
}

/// Same order as chronological, with neighbor domains pruned after each placement.
class ForwardChecker {
 public:
  ForwardChecker(const OrderedGraph& g, std::vector<ColorSet> domains) : g_(g), domain_(std::move(domains)) {
    color_.assign(g.vertex_count(), 0);
  }

  std::optional<std::vector<std::uint8_t>> run() {
    if (!consistent_start()) return std::nullopt;
    if (descend(0)) return color_;
    return std::nullopt;
  }

  std::uint64_t nodes = 0;

 private:
  bool consistent_start() {
    for (ColorSet d : domain_) {
      if (d == 0) return false;
    }
    return true;
  }

  bool descend(std::size_t i) {
    if (i == color_.size()) return true;
    for (std::uint8_t c : colors_of(domain_[i])) {
      const ColorSet bit = static_cast<ColorSet>(1u << c);
      const std::size_t mark = trail_.size();
      bool ok = true;
      for (Vertex w : g_.neighbors(i)) {
        if (w <= i || !(domain_[w] & bit)) continue;
        trail_.emplace_back(w, domain_[w]);
        domain_[w] = static_cast<ColorSet>(domain_[w] & ~bit);
        if (domain_[w] == 0) {
          ok = false;
          break;
        }
      }
      if (ok) {
        color_[i] = c;
        ++nodes;
        if (descend(i + 1)) return true;
      }
      while (trail_.size() > mark) {
        domain_[trail_.back().first] = trail_.back().second;
        trail_.pop_back();
      }
    }
    return false;
  }

  const OrderedGraph& g_;
  std::vector<ColorSet> domain_;
  std::vector<std::uint8_t> color_;
  std::vector<std::pair<std::size_t, ColorSet>> trail_;
};

/// Prefix search confirmed by the extension solver. The current witness is the
/// lex-least completion found so far, so only colors below it need re-checking.
std::optional<std::vector<std::uint8_t>> guided(const OrderedGraph& g, int k, std::vector<ColorSet> domains,
                                                std::uint64_t& nodes) {
  ExtensionSolver solver(g, k);
  auto witness = solver.solve(domains);
  if (!witness) {
    nodes += solver.nodes();
    return std::nullopt;
  }
  for (std::size_t i = 0; i < domains.size(); ++i) {
    for (std::uint8_t c : colors_of(domains[i])) {
      if (c >= (*witness)[i]) break;
      std::vector<ColorSet> trial = domains;
      trial[i] = static_cast<ColorSet>(1u << c);
      if (auto found = solver.solve(trial)) {
        witness = std::move(found);
        break;
      }
    }
    domains[i] = static_cast<ColorSet>(1u << (*witness)[i]);
  }
  nodes += solver.nodes() + domains.size();
  return witness;
}

}  // namespace

bool is_legal_coloring(const OrderedGraph& g, const Coloring& c) {
  if (c.size() != g.vertex_count()) {
    throw UsageError("coloring length " + std::to_string(c.size()) + " differs from vertex count " +
                     std::to_string(g.vertex_count()));
  }
  for (const auto& e : g.edges()) {
    if (c[e.u] == c[e.v]) return false;
  }
  return true;
}

LfColorResult lf_coloring(const OrderedGraph& g, int k, const LfOptions& options) {
  Prepared p = prepare(g, k, options);
  LfColorResult result;
  std::optional<std::vector<std::uint8_t>> found;
  switch (options.strategy) {
    case SearchStrategy::chronological:
      found = chronological(g, p.domains, result.nodes_expanded);
      break;
    case SearchStrategy::forward_checking: {
      ForwardChecker fc(g, p.domains);
      found = fc.run();
      result.nodes_expanded = fc.nodes;
      break;
    }
    case SearchStrategy::guided:
      found = guided(g, k, p.domains, result.nodes_expanded);
      break;
  }
  if (found) {
    result.status = LfColorResult::Status::colored;
    result.coloring = Coloring(k, std::move(*found));
  } else {
    result.status = LfColorResult::Status::uncolorable;
    result.sentinel = power_of_two_string(g.vertex_count());
  }
  return result;
}

std::optional<std::uint64_t> checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return std::nullopt;
    r *= base;
    if (r > cap) return std::nullopt;
  }
  return r;
}

std::vector<Coloring> enumerate_legal_colorings(const OrderedGraph& g, int k, std::uint64_t cap) {
  if (k < 2 || k > 10) throw UsageError("k must lie in [2,10], got " + std::to_string(k));
  const std::size_t n = g.vertex_count();
  if (!checked_power(static_cast<std::uint64_t>(k), n, cap)) {
    throw RefusalError("refusing to enumerate " + std::to_string(k) + "^" + std::to_string(n) +
                       " colorings (cap " + std::to_string(cap) + ")");
  }
  std::vector<Coloring> out;
  std::vector<std::uint8_t> color(n, 0);
  std::vector<int> next(n, 0);
  std::size_t i = 0;
  if (n == 0) return {Coloring(k, {})};
  while (true) {
    bool placed = false;
    while (next[i] < k) {
      const auto c = static_cast<std::uint8_t>(next[i]++);
      bool ok = true;
      for (Vertex w : g.neighbors(i)) {
        if (w >= i) break;
        if (color[w] == c) {
          ok = false;
          break;
        }
      }
      if (ok) {
        color[i] = c;
        placed = true;
        break;
      }
    }
    if (placed && i + 1 == n) {
      out.emplace_back(k, color);
      continue;
    }
    if (placed) {
      ++i;
      continue;
    }
    next[i] = 0;
    if (i == 0) break;
    --i;
  }
  return out;
}

bool is_k_colorable(const OrderedGraph& g, int k) { return find_coloring(g, k).has_value(); }

std::optional<Coloring> find_coloring(const OrderedGraph& g, int k) {
  if (k < 2 || k > 10) throw UsageError("k must lie in [2,10], got " + std::to_string(k));
  ExtensionSolver solver(g, k);
  auto found = solver.solve(std::vector<ColorSet>(g.vertex_count(), static_cast<ColorSet>((1u << k) - 1)));
  if (!found) return std::nullopt;
  return Coloring(k, std::move(*found));
}

CnfFormula coloring_to_cnf(const OrderedGraph& g, int k) {
  if (k < 1) throw UsageError("k must be positive");
  const std::size_t n = g.vertex_count();
  const auto var = [k](std::size_t v, int c) { return static_cast<Literal>(v * k + c + 1); };
  std::vector<Clause> clauses;
  for (std::size_t v = 0; v < n; ++v) {
    Clause some;
    for (int c = 0; c < k; ++c) some.push_back(var(v, c));
    clauses.push_back(std::move(some));
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) clauses.push_back({-var(v, a), -var(v, b)});
    }
  }
  for (const auto& e : g.edges()) {
    for (int c = 0; c < k; ++c) clauses.push_back({-var(e.u, c), -var(e.v, c)});
  }
  return CnfFormula(n * static_cast<std::size_t>(k), std::move(clauses));
}

}  // namespace lexfirst
