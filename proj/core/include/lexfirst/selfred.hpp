#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexfirst/errors.hpp"
#include "lexfirst/strings.hpp"

namespace lexfirst {

/// A pair predicate B with length bound p over solution alphabet Gamma.
/// proj_p(B) is the set of x with some (x, y) in B and |y| <= p(|x|).
template <class Instance>
struct ProjectionProblem {
  std::string name;
  std::function<bool(const Instance&, std::string_view)> pair;
  std::function<std::size_t(const Instance&)> size;
  PolynomialBound p;
  /// Ascending solution symbols.
  std::string alphabet;
  std::string instance_alphabet;
  std::function<std::string(const Instance&)> describe;

  std::uint64_t bound(const Instance& x) const { return p(size(x)); }
};

/// The map g(x, gamma), a strict order on instances and the chain bound q.
template <class Instance>
struct SelfReduction {
  std::function<Instance(const Instance&, char)> reduce;
  std::function<bool(const Instance&, const Instance&)> less_than;
  PolynomialBound q;
};

struct LfResult {
  std::string value;
  bool is_sentinel = false;
  std::uint64_t oracle_calls = 0;
};

inline constexpr std::uint64_t kSolutionCap = std::uint64_t{1} << 24;

namespace detail {

/// Visits every string over `alphabet` of length <= max_len in shortlex order until
/// `visit` returns true. Refuses when |alphabet|^(max_len+1) exceeds cap.
template <class Visit>
bool for_each_shortlex(const std::string& alphabet, std::uint64_t max_len, std::uint64_t cap, Visit&& visit) {
  const std::uint64_t k = alphabet.size();
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i <= max_len; ++i) {
    if (k != 0 && total > cap / std::max<std::uint64_t>(k, 1)) {
      throw RefusalError("refusing to enumerate " + std::to_string(k) + "^" + std::to_string(max_len + 1) +
                         " candidate solutions (cap " + std::to_string(cap) + ")");
    }
    total *= std::max<std::uint64_t>(k, 1);
  }
  std::string y;
  if (visit(std::string_view(y))) return true;
  if (k == 0) return false;
  for (std::uint64_t len = 1; len <= max_len; ++len) {
    std::vector<std::size_t> digit(len, 0);
    y.assign(len, alphabet[0]);
    while (true) {
      if (visit(std::string_view(y))) return true;
      std::size_t i = len;
      while (i > 0 && digit[i - 1] + 1 == k) {
        digit[i - 1] = 0;
        y[i - 1] = alphabet[0];
        --i;
      }
      if (i == 0) break;
      ++digit[i - 1];
      y[i - 1] = alphabet[digit[i - 1]];
    }
  }
  return false;
}

}  // namespace detail

/// Every y with |y| <= p(|x|) and B(x, y), shortlex order.
template <class Instance>
std::vector<std::string> sol_set(const Instance& x, const ProjectionProblem<Instance>& pp,
                                 std::uint64_t cap = kSolutionCap) {
  std::vector<std::string> out;
  detail::for_each_shortlex(pp.alphabet, pp.bound(x), cap, [&](std::string_view y) {
    if (pp.pair(x, y)) out.emplace_back(y);
    return false;
  });
  return out;
}

template <class Instance>
std::optional<std::string> first_solution(const Instance& x, const ProjectionProblem<Instance>& pp,
                                          std::uint64_t cap = kSolutionCap) {
  std::optional<std::string> found;
  detail::for_each_shortlex(pp.alphabet, pp.bound(x), cap, [&](std::string_view y) {
    if (!pp.pair(x, y)) return false;
    found = std::string(y);
    return true;
  });
  return found;
}

/// Shortlex-least solution, or "1" followed by p(|x|) zeros.
template <class Instance>
LfResult lf_of_projection(const Instance& x, const ProjectionProblem<Instance>& pp, std::uint64_t cap = kSolutionCap) {
  if (auto y = first_solution(x, pp, cap)) return LfResult{std::move(*y), false, 0};
  return LfResult{power_of_two_string(pp.bound(x)), true, 0};
}

template <class Instance>
using MembershipOracle = std::function<bool(const Instance&)>;

/// Brute-force "x has a solution".
template <class Instance>
MembershipOracle<Instance> brute_force_oracle(const ProjectionProblem<Instance>& pp, std::uint64_t cap = kSolutionCap) {
  return [pp, cap](const Instance& x) { return first_solution(x, pp, cap).has_value(); };
}

/// LF by prefix search: test epsilon, else extend by the least gamma whose reduced
/// instance the oracle accepts.
template <class Instance>
LfResult prefix_search_lf(const Instance& x, const ProjectionProblem<Instance>& pp, const SelfReduction<Instance>& sr,
                          const MembershipOracle<Instance>& oracle) {
  LfResult r;
  r.oracle_calls = 1;
  if (!oracle(x)) {
    r.value = power_of_two_string(pp.bound(x));
    r.is_sentinel = true;
    return r;
  }
  const std::uint64_t q = sr.q(pp.size(x));
  Instance cur = x;
  std::uint64_t elements = 1;
  while (!pp.pair(cur, std::string_view())) {
    if (elements + 1 > q) {
      throw SelfReductionViolation("prefix search for " + pp.describe(x) + " needs a chain longer than q(|x|)=" +
                                   std::to_string(q));
    }
    bool extended = false;
    for (char gamma : pp.alphabet) {
      Instance next = sr.reduce(cur, gamma);
      ++r.oracle_calls;
      if (oracle(next)) {
        r.value.push_back(gamma);
        cur = std::move(next);
        extended = true;
        break;
      }
    }
    if (!extended) {
      throw SelfReductionViolation("no symbol extends prefix \"" + r.value + "\" of " + pp.describe(x));
    }
    ++elements;
  }
  return r;
}

struct SelfReductionViolationRecord {
  std::size_t instance = 0;
  std::string description;
  std::string condition;
  std::string gamma;
  std::string y;
  std::string detail;
};

struct SelfReductionReport {
  std::size_t instances = 0;
  std::uint64_t checks = 0;
  std::uint64_t longest_chain = 0;
  std::vector<SelfReductionViolationRecord> violations;
};

namespace detail {

/// Longest descending g-chain from x (in elements) and the largest size along it.
template <class Instance>
std::pair<std::uint64_t, std::uint64_t> longest_chain(const Instance& x, const ProjectionProblem<Instance>& pp,
                                                      const SelfReduction<Instance>& sr) {
  std::uint64_t best = 1;
  std::uint64_t largest = pp.size(x);
  if (pp.bound(x) == 0) return {best, largest};
  for (char gamma : pp.alphabet) {
    Instance next = sr.reduce(x, gamma);
    if (!sr.less_than(next, x)) continue;
    const auto [len, big] = longest_chain(next, pp, sr);
    best = std::max(best, len + 1);
    largest = std::max(largest, big);
  }
  return {best, largest};
}

}  // namespace detail

/// Checks conditions (i) g(x,gamma) < x and (ii) (x, gamma y) in B iff (g(x,gamma), y) in B
/// for |y| <= p(|x|) - 1, plus the chain and length bounds, on every corpus instance
/// with p(|x|) >= 1.
template <class Instance>
SelfReductionReport verify_self_reduction(const ProjectionProblem<Instance>& pp, const SelfReduction<Instance>& sr,
                                          const std::vector<Instance>& corpus, std::uint64_t cap = kSolutionCap) {
  SelfReductionReport report;
  report.instances = corpus.size();
  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const Instance& x = corpus[idx];
    const std::uint64_t p = pp.bound(x);
    const std::uint64_t q = sr.q(pp.size(x));
    const auto add = [&](std::string condition, std::string gamma, std::string y, std::string detail) {
      report.violations.push_back({idx, pp.describe(x), std::move(condition), std::move(gamma), std::move(y),
                                   std::move(detail)});
    };
    if (p == 0) continue;
    for (char gamma : pp.alphabet) {
      const Instance reduced = sr.reduce(x, gamma);
      ++report.checks;
      if (!sr.less_than(reduced, x)) {
        add("(i)", std::string(1, gamma), "", "g(x,gamma) is not below x");
      }
      detail::for_each_shortlex(pp.alphabet, p - 1, cap, [&](std::string_view y) {
        ++report.checks;
        const std::string gy = std::string(1, gamma) + std::string(y);
        const bool lhs = pp.pair(x, gy);
        const bool rhs = pp.pair(reduced, y);
        if (lhs != rhs) {
          add("(ii)", std::string(1, gamma), std::string(y),
              std::string("B(x, gamma y) = ") + (lhs ? "true" : "false") + " but B(g(x,gamma), y) = " +
                  (rhs ? "true" : "false"));
          return true;
        }
        return false;
      });
    }
    const auto [chain, largest] = detail::longest_chain(x, pp, sr);
    report.longest_chain = std::max(report.longest_chain, chain);
    ++report.checks;
    if (chain > q) add("chain", "", "", "descending chain of " + std::to_string(chain) + " elements exceeds q=" + std::to_string(q));
    if (largest > q) add("length", "", "", "reduced instance of size " + std::to_string(largest) + " exceeds q=" + std::to_string(q));
  }
  return report;
}

/// C(x, y) = B(x, y) or (y = bin(2^p(|x|)) and x in D), with bound p + 1 and
/// alphabet Gamma plus {0, 1}.
template <class Instance>
ProjectionProblem<Instance> theorem35_construct(const ProjectionProblem<Instance>& pp_a,
                                                std::function<bool(const Instance&)> d) {
  ProjectionProblem<Instance> pp_d = pp_a;
  pp_d.name = pp_a.name + "+D";
  pp_d.pair = [pp_a, d](const Instance& x, std::string_view y) {
    if (pp_a.pair(x, y)) return true;
    const std::uint64_t p = pp_a.bound(x);
    return y.size() == p + 1 && y == power_of_two_string(p) && d(x);
  };
  pp_d.p = pp_a.p.plus(1);
  std::string alphabet = pp_a.alphabet + "01";
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  pp_d.alphabet = alphabet;
  return pp_d;
}

}  // namespace lexfirst
