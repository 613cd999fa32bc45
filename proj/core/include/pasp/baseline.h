#pragma once

// The earlier possibilistic semantics: weights ride along a classical
// Gelfond-Lifschitz reduct, so `not l` is false as soon as l has any positive
// certainty.

#include "pasp/limits.h"
#include "pasp/program.h"
#include "pasp/valuation.h"

#include <vector>

namespace pasp::baseline {

/// T_P(V)(l0) = max{λ | V^λ ⊨ body and the rule is in P_λ}.
Valuation poss_tp_step(const Program& program, const Valuation& current);

/// P*: least fixpoint of poss_tp_step from ∅. Requires a simple program
/// without constraint rules.
Valuation poss_tp_fixpoint(const Program& program);

/// Every consistent V with (P^{V^{>0}})* = V, sorted. Constraint rules reject
/// guesses whose classical projection violates them.
std::vector<Valuation> nicolas_answer_sets(const Program& program, const Limits& limits = {});

}  // namespace pasp::baseline
