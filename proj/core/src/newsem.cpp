#include "pasp/newsem.h"

#include "guess.h"
#include "pasp/error.h"

#include <set>

namespace pasp::newsem {

namespace {

void require_normal(const Program& program) {
  if (program.mode() != ProgramMode::literal || program.kind() == ProgramKind::disjunctive)
    throw Error("the constraint semantics for normal programs requires a literal program without disjunction");
}

}  // namespace

std::vector<NecessityConstraint> constraints_for(const Program& program, const std::optional<Valuation>& guess) {
  require_normal(program);
  if (program.has_naf() && !guess) throw Error("a program with naf needs a guess");
  std::vector<NecessityConstraint> out;
  for (const WeightedRule& r : program.rules()) {
    NecessityConstraint c{r.rule.head, {}};
    for (const BodyItem& b : r.rule.body)
      c.terms.push_back(b.naf ? BoundTerm::complement_of(b.clause, guess->get(b.clause))
                              : BoundTerm::necessity_of(b.clause));
    c.terms.push_back(BoundTerm::constant(r.weight));
    out.push_back(std::move(c));
  }
  return out;
}

kernel::Distribution least_specific_model(std::span<const NecessityConstraint> constraints, const kernel::Base& base) {
  return tighten(constraints, base);
}

Valuation read_off(const Program& program, const kernel::Distribution& pi) {
  Valuation v;
  for (Literal l : program.literals()) v.set(l, kernel::necessity(pi, Clause::unit(l)));
  return v;
}

SimpleResult simple_answer_set(const Program& program, const Limits& limits) {
  if (program.has_naf()) throw Error("simple_answer_set requires a program without naf");
  const kernel::Base base = program.base(limits.max_atoms);
  const auto cs = constraints_for(program);
  kernel::Distribution pi = least_specific_model(cs, base);
  Valuation v = read_off(program, pi);
  const bool consistent = pi.is_normalized();
  return {std::move(v), std::move(pi), consistent};
}

std::vector<AnswerSet> normal_answer_sets(const Program& program, std::vector<Certainty> grid, const Limits& limits) {
  require_normal(program);
  grid = detail::default_grid(program, std::move(grid));
  const kernel::Base base = program.base(limits.max_atoms);
  const std::vector<Literal> naf = detail::naf_literals(program);
  detail::checked_product(std::vector<std::size_t>(naf.size(), grid.size()), limits);

  std::set<AnswerSet> found;
  detail::Odometer guess(naf.size(), grid.size());
  do {
    Valuation v;
    for (std::size_t i = 0; i < naf.size(); ++i) v.set(naf[i], grid[guess[i]]);
    const auto cs = constraints_for(program, v);
    const kernel::Distribution pi = least_specific_model(cs, base);
    bool stable = true;
    for (std::size_t i = 0; i < naf.size() && stable; ++i)
      stable = kernel::necessity(pi, Clause::unit(naf[i])) == grid[guess[i]];
    if (stable) found.insert({read_off(program, pi), pi.is_normalized()});
  } while (guess.next());
  return {found.begin(), found.end()};
}

std::vector<Interpretation> crisp_answer_sets(const Program& program, const Limits& limits) {
  if (!program.crisp()) throw Error("crisp answer sets require every weight to be 1");
  std::set<Interpretation> out;
  for (const AnswerSet& as : normal_answer_sets(program, {Certainty::zero(), Certainty::one()}, limits)) {
    if (!as.valuation.crisp()) continue;
    Interpretation m;
    for (const auto& entry : as.valuation.entries()) m.insert(entry.first.literals().front());
    out.insert(std::move(m));
  }
  return {out.begin(), out.end()};
}

}  // namespace pasp::newsem
