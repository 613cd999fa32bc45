#include "pasp/baseline.h"

#include "pasp/error.h"
#include "pasp/reduct.h"

#include <algorithm>
#include <string>

namespace pasp::baseline {

Valuation poss_tp_step(const Program& program, const Valuation& current) {
  Valuation next;
  for (const WeightedRule& r : program.rules()) {
    if (r.rule.is_constraint()) continue;
    if (r.rule.head.size() != 1 || r.rule.has_naf()) throw Error("the possibilistic T_P requires a simple program");
    Certainty value = r.weight;
    for (const BodyItem& b : r.rule.body) value = std::min(value, current.get(b.clause));
    next.raise(r.rule.head, value);
  }
  return next;
}

Valuation poss_tp_fixpoint(const Program& program) {
  Valuation current;
  while (true) {
    Valuation next = poss_tp_step(program, current);
    if (next == current) return current;
    current = std::move(next);
  }
}

std::vector<Valuation> nicolas_answer_sets(const Program& program, const Limits& limits) {
  if (program.mode() != ProgramMode::literal || program.kind() == ProgramKind::disjunctive)
    throw Error("the baseline semantics requires a normal program");
  const std::vector<AtomId> atoms = program.herbrand();
  if (2 * atoms.size() > limits.max_literals)
    throw CapExceeded("instance too large: " + std::to_string(2 * atoms.size()) +
                      " literals exceed the enumeration cap of " + std::to_string(limits.max_literals));

  std::vector<WeightedRule> rules, constraints;
  for (const WeightedRule& r : program.rules()) (r.rule.is_constraint() ? constraints : rules).push_back(r);
  const Program unconstrained = program.with_rules(rules);

  auto violated = [&](const Interpretation& l) {
    return std::any_of(constraints.begin(), constraints.end(), [&](const WeightedRule& r) {
      return std::all_of(r.rule.body.begin(), r.rule.body.end(), [&](const BodyItem& b) {
        return l.count(b.clause.literals().front()) > 0 ? !b.naf : b.naf;
      });
    });
  };

  std::vector<Valuation> out;
  std::vector<int> digits(atoms.size(), 0);
  while (true) {
    Interpretation guess;
    for (std::size_t k = 0; k < atoms.size(); ++k)
      if (digits[k]) guess.insert(Literal(atoms[k], digits[k] == 2));
    const Valuation v = poss_tp_fixpoint(gl_reduct(unconstrained, guess));
    Interpretation support;
    for (const auto& entry : v.entries()) support.insert(entry.first.literals().front());
    if (support == guess && !violated(guess)) out.push_back(v);
    std::size_t k = 0;
    while (k < digits.size() && digits[k] == 2) digits[k++] = 0;
    if (k == digits.size()) break;
    ++digits[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pasp::baseline
