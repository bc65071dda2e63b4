#include "lexfirst/coloring_solver.hpp"

#include <bit>

#include "lexfirst/errors.hpp"

namespace lexfirst {

ExtensionSolver::ExtensionSolver(const OrderedGraph& g, int k) : k_(k) {
  if (k < 1 || k > 16) throw UsageError("extension solver supports 1 <= k <= 16");
  adjacency_.resize(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    adjacency_[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  }
}

bool ExtensionSolver::assign(std::size_t v, std::uint8_t c) {
  const ColorSet bit = static_cast<ColorSet>(1u << c);
  if (color_[v] == c) return true;
  if (color_[v] >= 0 || !(domain_[v] & bit)) return false;
  trail_.push_back({v, domain_[v], color_[v]});
  domain_[v] = bit;
  color_[v] = c;
  for (std::size_t w : adjacency_[v]) {
    if (color_[w] == c) return false;
    if (color_[w] >= 0 || !(domain_[w] & bit)) continue;
    trail_.push_back({w, domain_[w], color_[w]});
    domain_[w] = static_cast<ColorSet>(domain_[w] & ~bit);
    if (domain_[w] == 0) return false;
    if (std::has_single_bit(domain_[w])) queue_.push_back(w);
  }
  return true;
}

bool ExtensionSolver::propagate() {
  while (!queue_.empty()) {
    const std::size_t w = queue_.back();
    queue_.pop_back();
    if (color_[w] >= 0) continue;
    if (!assign(w, static_cast<std::uint8_t>(std::countr_zero(domain_[w])))) {
      queue_.clear();
      return false;
    }
  }
  return true;
}

void ExtensionSolver::undo_to(std::size_t mark) {
  while (trail_.size() > mark) {
    const auto& e = trail_.back();
    domain_[e.v] = e.domain;
    color_[e.v] = e.color;
    trail_.pop_back();
  }
}

bool ExtensionSolver::search() {
  std::size_t best = adjacency_.size();
  int best_size = 17;
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    if (color_[v] >= 0) continue;
    const int size = std::popcount(domain_[v]);
    if (size < best_size || (size == best_size && adjacency_[v].size() > adjacency_[best].size())) {
      best = v;
      best_size = size;
    }
  }
  if (best == adjacency_.size()) return true;

  for (ColorSet rest = domain_[best]; rest; rest = static_cast<ColorSet>(rest & (rest - 1))) {
    const auto c = static_cast<std::uint8_t>(std::countr_zero(rest));
    const std::size_t mark = trail_.size();
    ++nodes_;
    queue_.clear();
    if (assign(best, c) && propagate() && search()) return true;
    undo_to(mark);
  }
  return false;
}

std::optional<std::vector<std::uint8_t>> ExtensionSolver::solve(const std::vector<ColorSet>& domains) {
  const std::size_t n = adjacency_.size();
  if (domains.size() != n) throw UsageError("domain vector size differs from vertex count");
  domain_ = domains;
  color_.assign(n, -1);
  trail_.clear();
  queue_.clear();
  const ColorSet all = static_cast<ColorSet>((1u << k_) - 1);
  for (std::size_t v = 0; v < n; ++v) {
    domain_[v] = static_cast<ColorSet>(domain_[v] & all);
    if (domain_[v] == 0) return std::nullopt;
    if (std::has_single_bit(domain_[v])) queue_.push_back(v);
  }
  if (!propagate() || !search()) return std::nullopt;
  std::vector<std::uint8_t> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = static_cast<std::uint8_t>(color_[v]);
  return out;
}

}  // namespace lexfirst
