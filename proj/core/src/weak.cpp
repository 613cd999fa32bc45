#include "pasp/weak.h"

#include "guess.h"
#include "pasp/error.h"
#include "pasp/logic.h"
#include "pasp/reduct.h"

#include <algorithm>
#include <set>
#include <string>

namespace pasp::weak {

namespace {

void require_clausal(const Program& program) {
  if (program.mode() == ProgramMode::clausal) return;
  for (const WeightedRule& r : program.rules())
    if (r.rule.head.size() > 1) throw Error("weak disjunction requires a clausal program");
}

template <class NafValue>
std::vector<WeakConstraint> build(const Program& program, NafValue&& naf_value) {
  require_clausal(program);
  std::vector<WeakConstraint> out;
  for (const WeightedRule& r : program.rules()) {
    WeakConstraint c{r.rule.head, {}};
    for (const BodyItem& b : r.rule.body)
      c.terms.push_back(b.naf ? BoundTerm::complement_of(b.clause, naf_value(b.clause))
                              : BoundTerm::necessity_of(b.clause));
    c.terms.push_back(BoundTerm::constant(r.weight));
    out.push_back(std::move(c));
  }
  return out;
}

template <class Necessity>
Valuation step(std::span<const WeightedRule> rules, const Valuation& current, Necessity&& necessity) {
  Valuation next(ValuationMode::clausal);
  for (const WeightedRule& r : rules) {
    if (r.rule.is_constraint() || r.rule.has_naf())
      throw Error("T^w requires a positive clausal program without constraint rules");
    Certainty value = r.weight;
    for (const BodyItem& b : r.rule.body) {
      if (value.is_zero()) break;
      value = std::min(value, necessity(current, b.clause));
    }
    next.raise(r.rule.head, value);
  }
  return next;
}

template <class Necessity>
Valuation fixpoint(std::span<const WeightedRule> rules, Necessity&& necessity) {
  Valuation current(ValuationMode::clausal);
  while (true) {
    Valuation next = step(rules, current, necessity);
    if (next == current) return current;
    current = std::move(next);
  }
}

Certainty general_necessity(const Valuation& v, const Clause& e) { return logic::necessity(v, e); }

Certainty subset_necessity(const Valuation& v, const Clause& e) {
  Certainty best = Certainty::zero();
  for (const auto& [key, value] : v.entries())
    if (value > best && key.subset_of(e)) best = value;
  return best;
}

}  // namespace

std::vector<WeakConstraint> constraints_weak(const Program& program, const kernel::Distribution& piv) {
  return build(program, [&](const Clause& e) { return kernel::necessity(piv, e); });
}

std::vector<WeakConstraint> constraints_weak(const Program& program, const Valuation& guess) {
  return build(program, [&](const Clause& e) { return logic::necessity(guess, e); });
}

kernel::Distribution least_specific_weak(std::span<const WeakConstraint> constraints, const kernel::Base& base) {
  return tighten(constraints, base);
}

Valuation tw_step(const Program& program, const Valuation& current) {
  require_clausal(program);
  return step(program.rules(), current, general_necessity);
}

Valuation tw_fixpoint(const Program& program) {
  require_clausal(program);
  return fixpoint(program.rules(), general_necessity);
}

Valuation subset_fixpoint(const Program& program) {
  require_clausal(program);
  return fixpoint(program.rules(), subset_necessity);
}

std::vector<AnswerSet> weak_answer_sets(const Program& program, std::vector<Certainty> grid, const Limits& limits) {
  require_clausal(program);
  grid = detail::default_grid(program, std::move(grid));

  std::vector<const WeightedRule*> rules, constraints;
  for (const WeightedRule& r : program.rules()) (r.rule.is_constraint() ? constraints : rules).push_back(&r);
  std::set<Clause> naf_set;
  for (const WeightedRule* r : rules)
    for (const BodyItem& b : r->rule.body)
      if (b.naf) naf_set.insert(b.clause);
  const std::vector<Clause> naf(naf_set.begin(), naf_set.end());
  detail::checked_product(std::vector<std::size_t>(naf.size(), grid.size()), limits);

  // Per rule: indices of its distinct naf clauses.
  std::vector<std::vector<std::size_t>> naf_index(rules.size());
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (const BodyItem& b : rules[i]->rule.body)
      if (b.naf) naf_index[i].push_back(std::lower_bound(naf.begin(), naf.end(), b.clause) - naf.begin());

  const std::vector<Clause> heads = program.heads();
  std::set<AnswerSet> found;
  detail::Odometer guess(naf.size(), grid.size());
  do {
    std::vector<WeightedRule> reduct;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      Certainty entailed = Certainty::zero();
      for (std::size_t j : naf_index[i]) entailed = std::max(entailed, grid[guess.digits()[j]]);
      const Certainty weight = std::min(rules[i]->weight, entailed.complement());
      if (weight.is_zero()) continue;
      Rule positive{rules[i]->rule.head, {}};
      for (const BodyItem& b : rules[i]->rule.body)
        if (!b.naf) positive.body.push_back(b);
      reduct.push_back({std::move(positive), weight});
    }
    const Valuation e = fixpoint(reduct, general_necessity);
    bool stable = true;
    for (std::size_t j = 0; j < naf.size() && stable; ++j)
      stable = logic::necessity(e, naf[j]) == grid[guess.digits()[j]];
    if (!stable) continue;

    AnswerSet as{Valuation(ValuationMode::clausal), logic::consistent(e)};
    for (const Clause& h : heads) as.valuation.set(h, logic::necessity(e, h));
    if (!constraints.empty()) {
      if (!as.consistent) continue;
      const bool violated = std::any_of(constraints.begin(), constraints.end(), [&](const WeightedRule* r) {
        Certainty bound = r->weight;
        for (const BodyItem& b : r->rule.body) {
          const Certainty n = logic::necessity(e, b.clause);
          bound = std::min(bound, b.naf ? n.complement() : n);
        }
        return !bound.is_zero();
      });
      if (violated) continue;
    }
    found.insert(std::move(as));
  } while (guess.next());
  return {found.begin(), found.end()};
}

std::vector<kernel::Distribution> semantic_answer_sets(const Program& program, std::vector<Certainty> grid,
                                                       const Limits& limits) {
  require_clausal(program);
  grid = detail::default_grid(program, std::move(grid));
  const std::vector<Clause> heads = program.heads();
  const kernel::Base base = program.base(limits.max_atoms);
  detail::checked_product(std::vector<std::size_t>(heads.size(), grid.size()), limits);

  std::set<kernel::Distribution> found;
  detail::Odometer guess(heads.size(), grid.size());
  do {
    Valuation v(ValuationMode::clausal);
    for (std::size_t i = 0; i < heads.size(); ++i) v.set(heads[i], grid[guess.digits()[i]]);
    const kernel::Distribution piv = kernel::least_specific(v, base);
    if (found.count(piv)) continue;
    const std::vector<WeakConstraint> cs = constraints_weak(program, piv);
    if (least_specific_weak(cs, base) == piv) found.insert(piv);
  } while (guess.next());
  return {found.begin(), found.end()};
}

std::vector<AnswerSet> crisp_weak_answer_sets(const Program& program, const Limits& limits) {
  if (!program.crisp()) throw Error("crisp answer sets require every weight to be 1");
  std::vector<AnswerSet> out;
  for (AnswerSet& as : weak_answer_sets(program, {Certainty::zero(), Certainty::one()}, limits))
    if (as.valuation.crisp()) out.push_back(std::move(as));
  return out;
}

namespace {

std::vector<AnswerSet> query_answer_sets(const Program& program, const Limits& limits) {
  std::vector<AnswerSet> all = program.crisp() ? crisp_weak_answer_sets(program, limits)
                                               : weak_answer_sets(program, {}, limits);
  std::erase_if(all, [](const AnswerSet& as) { return !as.consistent; });
  return all;
}

}  // namespace

bool brave_query(const Program& program, const Clause& goal, Certainty level, const Limits& limits) {
  const auto sets = query_answer_sets(program, limits);
  return std::any_of(sets.begin(), sets.end(),
                     [&](const AnswerSet& as) { return logic::entails(as.valuation, goal, level); });
}

bool cautious_query(const Program& program, const Clause& goal, Certainty level, const Limits& limits) {
  const auto sets = query_answer_sets(program, limits);
  return std::all_of(sets.begin(), sets.end(),
                     [&](const AnswerSet& as) { return logic::entails(as.valuation, goal, level); });
}

}  // namespace pasp::weak
