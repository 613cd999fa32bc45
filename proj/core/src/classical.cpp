#include "pasp/classical.h"

#include "pasp/error.h"
#include "pasp/reduct.h"

#include <algorithm>
#include <cstdint>
#include <string>

namespace pasp::classical {

namespace {

using Mask = std::uint32_t;

constexpr Mask kPositiveBits = 0x55555555u;

// Interpretations as bitmasks: literal ±a at bit 2·pos(a) + negated.
class Compiled {
 public:
  struct CRule {
    Mask head = 0, body = 0, naf = 0;
    bool constraint = false;
  };

  Compiled(const Program& program, const Limits& limits) : atoms_(program.herbrand()) {
    const std::size_t cap = std::min<std::size_t>(limits.max_literals, 30);
    if (2 * atoms_.size() > cap)
      throw CapExceeded("instance too large: " + std::to_string(2 * atoms_.size()) +
                        " literals exceed the enumeration cap of " + std::to_string(cap));
    for (const WeightedRule& r : program.rules()) {
      CRule c;
      c.constraint = r.rule.is_constraint();
      c.head = mask(r.rule.head);
      for (const BodyItem& b : r.rule.body) (b.naf ? c.naf : c.body) |= mask(b.clause);
      rules_.push_back(c);
    }
  }

  std::size_t atom_count() const { return atoms_.size(); }
  Mask all() const { return atoms_.empty() ? 0 : (Mask{1} << (2 * atoms_.size())) - 1; }
  const std::vector<CRule>& rules() const { return rules_; }

  static bool consistent(Mask m) { return (m & (m >> 1) & kPositiveBits) == 0; }

  // J is a model of the positive rules kept by the reduct w.r.t. I.
  bool models(Mask j, Mask i, bool with_constraints) const {
    for (const CRule& r : rules_) {
      if (r.constraint && !with_constraints) continue;
      if ((r.naf & i) != 0) continue;
      if ((r.body & ~j) == 0 && (r.head & j) == 0) return false;
    }
    return true;
  }

  bool violates_constraints(Mask i) const {
    for (const CRule& r : rules_)
      if (r.constraint && (r.body & ~i) == 0 && (r.naf & i) == 0) return true;
    return false;
  }

  // All consistent interpretations, by base-3 counting over the atoms.
  template <class F>
  void for_each_consistent(F&& f) const {
    std::vector<int> digits(atoms_.size(), 0);
    while (true) {
      Mask m = 0;
      for (std::size_t k = 0; k < digits.size(); ++k)
        if (digits[k]) m |= Mask{1} << (2 * k + (digits[k] == 2 ? 1 : 0));
      f(m);
      std::size_t k = 0;
      while (k < digits.size() && digits[k] == 2) digits[k++] = 0;
      if (k == digits.size()) return;
      ++digits[k];
    }
  }

  Interpretation decode(Mask m) const {
    Interpretation out;
    for (std::size_t k = 0; k < atoms_.size(); ++k) {
      if (m & (Mask{1} << (2 * k))) out.insert(Literal(atoms_[k], false));
      if (m & (Mask{1} << (2 * k + 1))) out.insert(Literal(atoms_[k], true));
    }
    return out;
  }

 private:
  Mask mask(const Clause& c) const {
    Mask m = 0;
    for (Literal l : c) {
      const auto k = std::lower_bound(atoms_.begin(), atoms_.end(), l.atom()) - atoms_.begin();
      m |= Mask{1} << (2 * k + (l.negated() ? 1 : 0));
    }
    return m;
  }

  std::vector<AtomId> atoms_;
  std::vector<CRule> rules_;
};

// No strict submask of `i` models the reduct of `c` w.r.t. `i`.
bool minimal(const Compiled& c, Mask i, bool with_constraints) {
  if (i == 0) return true;
  for (Mask j = (i - 1) & i;; j = (j - 1) & i) {
    if (c.models(j, i, with_constraints)) return false;
    if (j == 0) break;
  }
  return true;
}

}  // namespace

Interpretation tp_step(const Program& program, const Interpretation& current) {
  Interpretation next;
  for (const WeightedRule& r : program.rules()) {
    if (r.rule.is_constraint()) continue;
    const bool fires = std::all_of(r.rule.body.begin(), r.rule.body.end(), [&](const BodyItem& b) {
      return !b.naf && b.clause.is_unit() && current.count(b.clause.literals().front()) > 0;
    });
    if (fires)
      for (Literal l : r.rule.head) next.insert(l);
  }
  return next;
}

Interpretation tp_fixpoint(const Program& program) {
  if (program.kind() > ProgramKind::simple) throw Error("tp_fixpoint requires a simple program");
  Interpretation current;
  while (true) {
    Interpretation next = tp_step(program, current);
    if (next == current) return current;
    current = std::move(next);
  }
}

bool is_model(const Interpretation& interpretation, const Rule& rule) {
  const bool body = std::all_of(rule.body.begin(), rule.body.end(), [&](const BodyItem& b) {
    return b.naf || std::any_of(b.clause.begin(), b.clause.end(), [&](Literal l) { return interpretation.count(l) > 0; });
  });
  if (!body) return true;
  return std::any_of(rule.head.begin(), rule.head.end(), [&](Literal l) { return interpretation.count(l) > 0; });
}

bool is_model(const Interpretation& interpretation, const Program& positive) {
  return std::all_of(positive.rules().begin(), positive.rules().end(),
                     [&](const WeightedRule& r) { return is_model(interpretation, r.rule); });
}

std::vector<Interpretation> minimal_models(const Program& positive, const Limits& limits) {
  if (positive.mode() != ProgramMode::literal) throw Error("minimal_models requires a literal program");
  if (positive.has_naf()) throw Error("minimal_models requires a program without naf");
  const Compiled c(positive, limits);
  std::vector<Interpretation> out;
  c.for_each_consistent([&](Mask m) {
    if (c.models(m, 0, true) && minimal(c, m, true)) out.push_back(c.decode(m));
  });
  if (out.empty()) out.push_back(c.decode(c.all()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Interpretation> answer_sets(const Program& program, const Limits& limits) {
  if (program.mode() != ProgramMode::literal) throw Error("classical answer sets require a literal program");
  const Compiled c(program, limits);
  std::vector<Mask> found;
  if (program.kind() <= ProgramKind::simple && !program.has_naf()) {
    std::vector<WeightedRule> rules;
    for (const WeightedRule& r : program.rules())
      if (!r.rule.is_constraint()) rules.push_back(r);
    const Interpretation m = tp_fixpoint(program.with_rules(std::move(rules)));
    Mask mm = 0;
    const auto atoms = program.herbrand();
    for (Literal l : m) {
      const auto k = std::lower_bound(atoms.begin(), atoms.end(), l.atom()) - atoms.begin();
      mm |= Mask{1} << (2 * k + (l.negated() ? 1 : 0));
    }
    found.push_back(Compiled::consistent(mm) ? mm : c.all());
  } else {
    c.for_each_consistent([&](Mask m) {
      if (c.models(m, m, false) && minimal(c, m, false)) found.push_back(m);
    });
    if (found.empty()) {
      // Lit_P is the answer set iff the naf-free rules have no consistent model.
      bool any = false;
      c.for_each_consistent([&](Mask m) { any = any || c.models(m, c.all(), false); });
      if (!any) found.push_back(c.all());
    }
  }
  std::vector<Interpretation> out;
  for (Mask m : found)
    if (!c.violates_constraints(m)) out.push_back(c.decode(m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pasp::classical
