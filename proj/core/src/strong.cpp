#include "pasp/strong.h"

#include "guess.h"
#include "pasp/error.h"
#include "pasp/newsem.h"

#include <set>

namespace pasp::strong {

namespace {

Certainty head_value(const Clause& head, const kernel::Distribution& pi) {
  if (head.empty()) return kernel::necessity(pi, head);
  Certainty best = Certainty::zero();
  for (Literal l : head) best = std::max(best, kernel::necessity(pi, Clause::unit(l)));
  return best;
}

}  // namespace

bool holds(const StrongConstraint& constraint, const kernel::Distribution& pi) {
  return head_value(constraint.head, pi) >= evaluate_bound(constraint.terms, pi);
}

std::vector<StrongConstraint> constraints_strong(const Program& program, const std::optional<Valuation>& guess) {
  if (program.mode() != ProgramMode::literal) throw Error("strong disjunction requires a literal program");
  if (program.has_naf() && !guess) throw Error("a program with naf needs a guess");
  std::vector<StrongConstraint> out;
  for (const WeightedRule& r : program.rules()) {
    StrongConstraint c{r.rule.head, {}};
    for (const BodyItem& b : r.rule.body)
      c.terms.push_back(b.naf ? BoundTerm::complement_of(b.clause, guess->get(b.clause))
                              : BoundTerm::necessity_of(b.clause));
    c.terms.push_back(BoundTerm::constant(r.weight));
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<kernel::Distribution> min_specific_models(std::span<const StrongConstraint> constraints,
                                                      const kernel::Base& base, const Limits& limits) {
  std::vector<std::size_t> radix;
  for (const StrongConstraint& c : constraints) radix.push_back(std::max<std::size_t>(c.head.size(), 1));
  detail::checked_product(radix, limits, "choice space");

  std::set<kernel::Distribution> candidates;
  detail::Odometer choice(radix);
  std::vector<NecessityConstraint> chosen(constraints.size());
  do {
    for (std::size_t i = 0; i < constraints.size(); ++i) {
      const Clause& head = constraints[i].head;
      chosen[i].head = head.empty() ? head : Clause::unit(head.literals()[choice[i]]);
      chosen[i].terms = constraints[i].terms;
    }
    kernel::Distribution pi = tighten(chosen, base);
    if (std::all_of(constraints.begin(), constraints.end(), [&](const StrongConstraint& c) { return holds(c, pi); }))
      candidates.insert(std::move(pi));
  } while (choice.next());

  std::vector<kernel::Distribution> out;
  for (const kernel::Distribution& pi : candidates) {
    const bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](const kernel::Distribution& other) {
      return kernel::compare_specificity(other, pi) == kernel::Specificity::greater;
    });
    if (!dominated) out.push_back(pi);
  }
  return out;
}

std::vector<AnswerSet> strong_answer_sets(const Program& program, std::vector<Certainty> grid, const Limits& limits) {
  if (program.mode() != ProgramMode::literal) throw Error("strong disjunction requires a literal program");
  grid = detail::default_grid(program, std::move(grid));
  const kernel::Base base = program.base(limits.max_atoms);
  const std::vector<Literal> naf = detail::naf_literals(program);
  detail::checked_product(std::vector<std::size_t>(naf.size(), grid.size()), limits);

  std::set<AnswerSet> found;
  detail::Odometer guess(naf.size(), grid.size());
  do {
    Valuation v;
    for (std::size_t i = 0; i < naf.size(); ++i) v.set(naf[i], grid[guess[i]]);
    const auto cs = constraints_strong(program, v);
    for (const kernel::Distribution& pi : min_specific_models(cs, base, limits)) {
      bool stable = true;
      for (std::size_t i = 0; i < naf.size() && stable; ++i)
        stable = kernel::necessity(pi, Clause::unit(naf[i])) == grid[guess[i]];
      if (stable) found.insert({newsem::read_off(program, pi), pi.is_normalized()});
    }
  } while (guess.next());
  return {found.begin(), found.end()};
}

std::vector<Interpretation> crisp_answer_sets(const Program& program, const Limits& limits) {
  if (!program.crisp()) throw Error("crisp answer sets require every weight to be 1");
  std::set<Interpretation> out;
  for (const AnswerSet& as : strong_answer_sets(program, {Certainty::zero(), Certainty::one()}, limits)) {
    if (!as.valuation.crisp()) continue;
    Interpretation m;
    for (const auto& entry : as.valuation.entries()) m.insert(entry.first.literals().front());
    out.insert(std::move(m));
  }
  return {out.begin(), out.end()};
}

}  // namespace pasp::strong
