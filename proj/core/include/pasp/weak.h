#pragma once

// Weak (clausal) disjunction: a head e0 is read as N(e0), so a disjunction is
// believed without any disjunct being chosen.

#include "pasp/certainty.h"
#include "pasp/constraint.h"
#include "pasp/kernel.h"
#include "pasp/limits.h"
#include "pasp/program.h"
#include "pasp/valuation.h"

#include <vector>

namespace pasp::weak {

/// N(e0) >= min(N(e1), …, 1 - N_V(e_{m+1}), …, λ) with a clause head.
using WeakConstraint = NecessityConstraint;

/// One constraint per rule, naf clauses evaluated against the guess `piv`.
/// Throws Error unless the program is clausal.
std::vector<WeakConstraint> constraints_weak(const Program& program, const kernel::Distribution& piv);
/// Same, with N_V read syntactically from a clausal valuation.
std::vector<WeakConstraint> constraints_weak(const Program& program, const Valuation& guess);

/// The least specific model of resolved weak constraints.
kernel::Distribution least_specific_weak(std::span<const WeakConstraint> constraints, const kernel::Base& base);

/// One application of T^w to `current`. Requires a positive clausal program
/// without constraint rules.
Valuation tw_step(const Program& program, const Valuation& current);

/// P*_w, the least fixpoint of T^w from ∅.
Valuation tw_fixpoint(const Program& program);

/// T^w fixpoint where V^λ ⊨ e is decided as "some clause of V^λ is a subset
/// of e". Exact for programs without naf and without classical negation.
Valuation subset_fixpoint(const Program& program);

/// Answer sets through the clausal reduct and T^w. Each answer set is
/// reported by N_E over heads(P), zeros omitted, which determines π_E.
/// `grid` defaults to cert⁺(P). Constraint rules only filter: answer sets
/// survive if they are consistent and every constraint bound is 0.
std::vector<AnswerSet> weak_answer_sets(const Program& program, std::vector<Certainty> grid = {},
                                        const Limits& limits = {});

/// Answer sets through the semantic definition: every grid-valued head
/// valuation V whose π_V is the least specific model of the constraints
/// induced by π_V. Sorted, distinct.
std::vector<kernel::Distribution> semantic_answer_sets(const Program& program, std::vector<Certainty> grid = {},
                                                       const Limits& limits = {});

/// Two-valued answer sets on the grid {0,1}. Requires every weight to be 1.
std::vector<AnswerSet> crisp_weak_answer_sets(const Program& program, const Limits& limits = {});

/// Some consistent answer set entails goal^level. Crisp programs use the
/// crisp answer sets, others the cert⁺ grid.
bool brave_query(const Program& program, const Clause& goal, Certainty level = Certainty::one(),
                 const Limits& limits = {});
/// Every consistent answer set entails goal^level.
bool cautious_query(const Program& program, const Clause& goal, Certainty level = Certainty::one(),
                    const Limits& limits = {});

}  // namespace pasp::weak
