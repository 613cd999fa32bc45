#pragma once

// Syntactic propositional reasoning over small clause sets. Used wherever a
// valuation stands in for its (exponentially large) induced distribution.

#include "pasp/certainty.h"
#include "pasp/literal.h"
#include "pasp/valuation.h"

#include <span>

namespace pasp::logic {

/// DPLL satisfiability of a clause set. The empty set is satisfiable; a set
/// containing ⊥ is not.
bool satisfiable(std::span<const Clause> clauses);

/// premises ⊨ goal, decided as unsatisfiability of premises ∪ ¬goal.
bool entails(std::span<const Clause> premises, const Clause& goal);

/// N_V(e) under the least specific distribution induced by `v`: the largest
/// λ with V^λ ⊨ e, or 0.
Certainty necessity(const Valuation& v, const Clause& clause);

/// V ⊨ e^level.
bool entails(const Valuation& v, const Clause& clause, Certainty level);

/// The distribution induced by `v` is normalized (V^{>0} is satisfiable).
bool consistent(const Valuation& v);

}  // namespace pasp::logic
