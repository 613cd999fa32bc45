#include "pasp/logic.h"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace pasp::logic {

namespace {

// Literals are encoded as 2 * var + negated over densely renumbered atoms.
class Dpll {
 public:
  void add(const Clause& clause) {
    if (clause.tautology()) return;
    std::vector<int> lits;
    lits.reserve(clause.size());
    for (Literal l : clause) lits.push_back(2 * var(l.atom()) + (l.negated() ? 1 : 0));
    clauses_.push_back(std::move(lits));
  }

  bool solve() {
    assign_.assign(vars_.size(), -1);
    return search();
  }

 private:
  int var(AtomId atom) {
    auto [it, inserted] = vars_.try_emplace(atom, static_cast<int>(vars_.size()));
    return it->second;
  }

  // 1 true, 0 false, -1 unassigned.
  int value(int lit) const {
    const int a = assign_[lit >> 1];
    return a < 0 ? -1 : (a ^ (lit & 1));
  }

  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& clause : clauses_) {
        int unassigned = 0, last = -1;
        bool sat = false;
        for (int lit : clause) {
          const int v = value(lit);
          if (v == 1) {
            sat = true;
            break;
          }
          if (v < 0) ++unassigned, last = lit;
        }
        if (sat) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          assign_[last >> 1] = 1 ^ (last & 1);
          trail.push_back(last >> 1);
          changed = true;
        }
      }
    }
    return true;
  }

  bool search() {
    std::vector<int> trail;
    if (!propagate(trail)) {
      undo(trail);
      return false;
    }
    int branch = -1;
    for (const auto& clause : clauses_) {
      bool sat = false;
      int candidate = -1;
      for (int lit : clause) {
        const int v = value(lit);
        if (v == 1) {
          sat = true;
          break;
        }
        if (v < 0 && candidate < 0) candidate = lit;
      }
      if (!sat) {
        branch = candidate;
        break;
      }
    }
    if (branch < 0) return true;
    for (int polarity : {1 ^ (branch & 1), branch & 1}) {
      assign_[branch >> 1] = polarity;
      if (search()) return true;
    }
    assign_[branch >> 1] = -1;
    undo(trail);
    return false;
  }

  void undo(const std::vector<int>& trail) {
    for (int v : trail) assign_[v] = -1;
  }

  std::unordered_map<AtomId, int> vars_;
  std::vector<std::vector<int>> clauses_;
  std::vector<int> assign_;
};

}  // namespace

bool satisfiable(std::span<const Clause> clauses) {
  Dpll solver;
  for (const Clause& c : clauses) {
    if (c.empty()) return false;
    solver.add(c);
  }
  return solver.solve();
}

bool entails(std::span<const Clause> premises, const Clause& goal) {
  if (goal.tautology()) return true;
  Dpll solver;
  for (const Clause& c : premises) {
    if (c.empty()) return true;
    solver.add(c);
  }
  for (Literal l : goal) solver.add(Clause::unit(~l));
  return !solver.solve();
}

Certainty necessity(const Valuation& v, const Clause& clause) {
  if (clause.tautology()) return Certainty::one();
  const std::vector<Certainty> levels = v.levels();
  // V^λ grows as λ falls, so entailment is monotone along `levels`.
  std::size_t lo = 0, hi = levels.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const std::vector<Clause> cut = v.cut(levels[mid]);
    if (entails(cut, clause))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo < levels.size() ? levels[lo] : Certainty::zero();
}

bool entails(const Valuation& v, const Clause& clause, Certainty level) {
  if (level.is_zero()) return true;
  const std::vector<Clause> cut = v.cut(level);
  return entails(cut, clause);
}

bool consistent(const Valuation& v) {
  std::vector<Clause> all;
  for (const auto& entry : v.entries()) all.push_back(entry.first);
  return satisfiable(all);
}

}  // namespace pasp::logic
