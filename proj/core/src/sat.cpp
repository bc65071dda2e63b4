#include "lexfirst/sat.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>

#include "lexfirst/errors.hpp"

namespace lexfirst {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t j = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > j) out.push_back(line.substr(j, i - j));
  }
  return out;
}

long long parse_int(std::string_view tok, std::size_t line) {
  long long value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError("expected an integer, got \"" + std::string(tok) + "\"", line);
  return value;
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
  const auto lines = split_lines(text);
  std::optional<std::size_t> n;
  std::size_t declared = 0;
  std::size_t header_line = 0;
  std::vector<Clause> clauses;
  Clause current;
  std::size_t last_line = 0;
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::size_t line_no = idx + 1;
    const auto toks = tokens(lines[idx]);
    if (toks.empty() || toks[0][0] == 'c') continue;
    if (toks[0] == "%") break;
    last_line = line_no;
    if (toks[0] == "p") {
      if (n) throw ParseError("duplicate problem line", line_no);
      if (toks.size() != 4 || toks[1] != "cnf") throw ParseError("problem line must read \"p cnf <n> <z>\"", line_no);
      const long long nv = parse_int(toks[2], line_no);
      const long long nz = parse_int(toks[3], line_no);
      if (nv < 0 || nz < 0) throw ParseError("negative count in problem line", line_no);
      n = static_cast<std::size_t>(nv);
      declared = static_cast<std::size_t>(nz);
      header_line = line_no;
      continue;
    }
    if (!n) throw ParseError("clause data before the \"p cnf\" line", line_no);
    for (auto tok : toks) {
      const long long lit = parse_int(tok, line_no);
      if (lit == 0) {
        if (current.empty()) throw ParseError("empty clause", line_no);
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (static_cast<std::size_t>(std::llabs(lit)) > *n) {
        throw ParseError("literal " + std::to_string(lit) + " exceeds variable count " + std::to_string(*n), line_no);
      }
      current.push_back(static_cast<Literal>(lit));
    }
  }
  if (!n) throw ParseError("missing \"p cnf\" problem line", 0);
  if (!current.empty()) throw ParseError("last clause is not terminated by 0", last_line);
  if (clauses.size() != declared) {
    throw ParseError("header declares " + std::to_string(declared) + " clauses but " +
                         std::to_string(clauses.size()) + " were read",
                     header_line);
  }
  return CnfFormula(*n, std::move(clauses));
}

CnfFormula normalize_to_3cnf(const CnfFormula& f, WideClauseMode mode) {
  std::vector<Clause> out;
  std::size_t n = f.variable_count();
  for (std::size_t i = 0; i < f.clauses().size(); ++i) {
    const Clause& c = f.clauses()[i];
    if (c.empty()) throw UsageError("clause " + std::to_string(i + 1) + " is empty");
    if (c.size() <= 3) {
      Clause padded = c;
      while (padded.size() < 3) padded.push_back(padded.back());
      out.push_back(std::move(padded));
      continue;
    }
    if (mode == WideClauseMode::refuse) {
      throw RefusalError("clause " + std::to_string(i + 1) + " has " + std::to_string(c.size()) +
                         " literals; only clauses of width 1-3 are normalized");
    }
    // (l1 | l2 | y1) (~y1 | l3 | y2) ... (~y_{w-3} | l_{w-1} | l_w)
    auto fresh = static_cast<Literal>(++n);
    out.push_back({c[0], c[1], fresh});
    for (std::size_t j = 2; j + 2 < c.size(); ++j) {
      const auto next = static_cast<Literal>(++n);
      out.push_back({-fresh, c[j], next});
      fresh = next;
    }
    out.push_back({-fresh, c[c.size() - 2], c.back()});
  }
  std::optional<std::size_t> decision = f.decision_index();
  if (n != f.variable_count() && !decision && f.variable_count() > 0) decision = f.variable_count();
  return CnfFormula(n, std::move(out), decision);
}

bool satisfies(const CnfFormula& f, const TFAssignment& a) {
  if (a.size() != f.variable_count()) {
    throw UsageError("assignment length " + std::to_string(a.size()) + " differs from variable count " +
                     std::to_string(f.variable_count()));
  }
  for (const auto& clause : f.clauses()) {
    const bool sat = std::any_of(clause.begin(), clause.end(), [&](Literal lit) {
      const bool value = a.is_true(static_cast<std::size_t>(std::abs(lit)) - 1);
      return lit > 0 ? value : !value;
    });
    if (!sat) return false;
  }
  return true;
}

std::optional<TFAssignment> lf_sat_assignment_with_prefix(const CnfFormula& f, const std::vector<std::uint8_t>& prefix) {
  const std::size_t n = f.variable_count();
  if (prefix.size() > n) throw UsageError("prefix longer than the variable count");
  for (auto s : prefix) {
    if (s != 1 && s != 2) throw UsageError("assignment symbols must be 1 or 2");
  }
  // Clauses are checked once their highest variable is assigned.
  std::vector<std::vector<const Clause*>> closing(n + 1);
  for (const auto& clause : f.clauses()) {
    std::size_t top = 0;
    for (Literal lit : clause) top = std::max(top, static_cast<std::size_t>(std::abs(lit)));
    closing[top].push_back(&clause);
  }
  if (!closing[0].empty()) return std::nullopt;

  std::vector<std::uint8_t> sym(n, 0);
  const auto clause_ok = [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](Literal lit) {
      const bool value = sym[static_cast<std::size_t>(std::abs(lit)) - 1] == 1;
      return lit > 0 ? value : !value;
    });
  };
  std::size_t i = 0;
  while (true) {
    if (i == n) return TFAssignment(sym);
    bool placed = false;
    while (sym[i] < 2) {
      ++sym[i];
      if (i < prefix.size() && sym[i] != prefix[i]) continue;
      if (std::all_of(closing[i + 1].begin(), closing[i + 1].end(), [&](const Clause* c) { return clause_ok(*c); })) {
        placed = true;
        break;
      }
    }
    if (placed) {
      ++i;
      continue;
    }
    sym[i] = 0;
    if (i == 0) return std::nullopt;
    --i;
  }
}

std::optional<TFAssignment> lf_sat_assignment(const CnfFormula& f) { return lf_sat_assignment_with_prefix(f, {}); }

OddMinSat decide_odd_min_sat(const CnfFormula& f) {
  const auto lf = lf_sat_assignment(f);
  if (!lf || f.variable_count() == 0) return OddMinSat::nonmember;
  return lf->is_true(f.decision_variable() - 1) ? OddMinSat::member : OddMinSat::nonmember;
}

std::vector<TFAssignment> enumerate_satisfying(const CnfFormula& f, std::uint64_t cap) {
  const std::size_t n = f.variable_count();
  if (n >= 63 || (std::uint64_t{1} << n) > cap) {
    throw RefusalError("refusing to enumerate 2^" + std::to_string(n) + " assignments (cap " + std::to_string(cap) +
                       ")");
  }
  std::vector<TFAssignment> out;
  std::vector<std::uint8_t> sym(n);
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); ++t) {
    for (std::size_t i = 0; i < n; ++i) sym[i] = static_cast<std::uint8_t>(1 + ((t >> (n - 1 - i)) & 1));
    TFAssignment a(sym);
    if (satisfies(f, a)) out.push_back(std::move(a));
  }
  return out;
}

namespace {

class Dpll {
 public:
  explicit Dpll(const CnfFormula& f)
      : n_(f.variable_count()),
        value_(n_ + 1, -1),
        level_(n_ + 1, 0),
        reason_(n_ + 1, kNone),
        activity_(n_ + 1, 0.0),
        phase_(n_ + 1, 0),
        seen_(n_ + 1, 0),
        watches_(2 * (n_ + 1)) {
    for (const auto& raw : f.clauses()) {
      Clause c = raw;
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      bool tautology = false;
      for (Literal lit : c) tautology = tautology || std::binary_search(c.begin(), c.end(), -lit);
      if (tautology) continue;
      if (c.empty()) {
        trivially_unsat_ = true;
        continue;
      }
      if (c.size() == 1) {
        units_.push_back(c[0]);
        continue;
      }
      add_clause(std::move(c));
    }
  }

  std::optional<std::vector<bool>> solve() {
    if (trivially_unsat_) return std::nullopt;
    for (Literal lit : units_) {
      if (!enqueue(lit, kNone)) return std::nullopt;
    }
    if (propagate() != kNone) return std::nullopt;
    std::uint64_t restart = 0;
    while (true) {
      const int result = search(100 * luby(restart++));
      if (result == 0) return std::nullopt;
      if (result == 1) break;
    }
    std::vector<bool> model(n_);
    for (std::size_t v = 1; v <= n_; ++v) model[v - 1] = value_[v] == 1;
    return model;
  }

 private:
  static constexpr std::size_t kNone = SIZE_MAX;

  static std::size_t code(Literal lit) { return 2 * var(lit) + (lit < 0 ? 1 : 0); }
  static std::size_t var(Literal lit) { return static_cast<std::size_t>(std::abs(lit)); }

  static std::uint64_t luby(std::uint64_t i) {
    std::uint64_t size = 1, seq = 0;
    while (size < i + 1) {
      ++seq;
      size = 2 * size + 1;
    }
    while (size - 1 != i) {
      size = (size - 1) >> 1;
      --seq;
      i = i % size;
    }
    return std::uint64_t{1} << seq;
  }

  std::size_t add_clause(Clause c) {
    const std::size_t i = clauses_.size();
    watches_[code(c[0])].push_back(i);
    watches_[code(c[1])].push_back(i);
    clauses_.push_back(std::move(c));
    return i;
  }

  /// 1 true, 0 false, -1 unassigned
  int lit_value(Literal lit) const {
    const int v = value_[var(lit)];
    if (v < 0) return -1;
    return lit > 0 ? v : 1 - v;
  }

  std::size_t decision_level() const { return trail_lim_.size(); }

  bool enqueue(Literal lit, std::size_t reason) {
    const int cur = lit_value(lit);
    if (cur >= 0) return cur == 1;
    const std::size_t v = var(lit);
    value_[v] = lit > 0 ? 1 : 0;
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(lit);
    return true;
  }

  /// Index of a falsified clause, or kNone.
  std::size_t propagate() {
    while (head_ < trail_.size()) {
      const Literal falsified = -trail_[head_++];
      auto& ws = watches_[code(falsified)];
      std::size_t keep = 0;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        const std::size_t ci = ws[i];
        Clause& c = clauses_[ci];
        if (c[0] == falsified) std::swap(c[0], c[1]);
        if (lit_value(c[0]) == 1) {
          ws[keep++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t j = 2; j < c.size(); ++j) {
          if (lit_value(c[j]) != 0) {
            std::swap(c[1], c[j]);
            watches_[code(c[1])].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[keep++] = ci;
        if (!enqueue(c[0], ci)) {
          for (std::size_t j = i + 1; j < ws.size(); ++j) ws[keep++] = ws[j];
          ws.resize(keep);
          return ci;
        }
      }
      ws.resize(keep);
    }
    return kNone;
  }

  void bump(std::size_t v) {
    activity_[v] += increment_;
    if (activity_[v] > 1e100) {
      for (double& a : activity_) a *= 1e-100;
      increment_ *= 1e-100;
    }
  }

  void backtrack(std::size_t level) {
    if (decision_level() <= level) return;
    const std::size_t mark = trail_lim_[level];
    while (trail_.size() > mark) {
      const std::size_t v = var(trail_.back());
      phase_[v] = static_cast<std::int8_t>(value_[v]);
      value_[v] = -1;
      reason_[v] = kNone;
      trail_.pop_back();
    }
    trail_lim_.resize(level);
    head_ = mark;
  }

  /// First-UIP clause for the conflict; learnt[0] is the asserting literal.
  Clause analyze(std::size_t conflict, std::size_t& back_level) {
    Clause learnt{0};
    std::size_t open = 0;
    Literal p = 0;
    std::size_t index = trail_.size();
    do {
      const Clause& c = clauses_[conflict];
      for (std::size_t j = p == 0 ? 0 : 1; j < c.size(); ++j) {
        const std::size_t v = var(c[j]);
        if (seen_[v] || level_[v] == 0) continue;
        seen_[v] = 1;
        bump(v);
        if (level_[v] == decision_level()) {
          ++open;
        } else {
          learnt.push_back(c[j]);
        }
      }
      while (!seen_[var(trail_[--index])]) {
      }
      p = trail_[index];
      conflict = reason_[var(p)];
      seen_[var(p)] = 0;
      --open;
    } while (open > 0);
    learnt[0] = -p;
    back_level = 0;
    std::size_t at = 1;
    for (std::size_t j = 1; j < learnt.size(); ++j) {
      seen_[var(learnt[j])] = 0;
      if (level_[var(learnt[j])] > back_level) {
        back_level = level_[var(learnt[j])];
        at = j;
      }
    }
    if (learnt.size() > 1) std::swap(learnt[1], learnt[at]);
    return learnt;
  }

  Literal choose() const {
    std::size_t best = 0;
    for (std::size_t v = 1; v <= n_; ++v) {
      if (value_[v] < 0 && (best == 0 || activity_[v] > activity_[best])) best = v;
    }
    if (best == 0) return 0;
    const Literal lit = static_cast<Literal>(best);
    return phase_[best] == 1 ? lit : -lit;
  }

  /// 1 satisfiable, 0 unsatisfiable, -1 restart.
  int search(std::uint64_t budget) {
    std::uint64_t conflicts = 0;
    while (true) {
      const std::size_t conflict = propagate();
      if (conflict != kNone) {
        if (decision_level() == 0) return 0;
        std::size_t back_level = 0;
        Clause learnt = analyze(conflict, back_level);
        backtrack(back_level);
        if (learnt.size() == 1) {
          enqueue(learnt[0], kNone);
        } else {
          const Literal asserting = learnt[0];
          enqueue(asserting, add_clause(std::move(learnt)));
        }
        increment_ /= 0.95;
        ++conflicts;
        continue;
      }
      if (conflicts >= budget) {
        backtrack(0);
        return -1;
      }
      const Literal lit = choose();
      if (lit == 0) return 1;
      trail_lim_.push_back(trail_.size());
      enqueue(lit, kNone);
    }
  }

  std::size_t n_;
  std::vector<int> value_;
  std::vector<std::size_t> level_;
  std::vector<std::size_t> reason_;
  std::vector<double> activity_;
  std::vector<std::int8_t> phase_;
  std::vector<std::int8_t> seen_;
  std::vector<Clause> clauses_;
  std::vector<Literal> units_;
  std::vector<std::vector<std::size_t>> watches_;
  std::vector<Literal> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t head_ = 0;
  double increment_ = 1.0;
  bool trivially_unsat_ = false;
};

}  // namespace

std::optional<std::vector<bool>> dpll_solve(const CnfFormula& f) { return Dpll(f).solve(); }

}  // namespace lexfirst
