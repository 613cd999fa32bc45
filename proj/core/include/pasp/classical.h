#pragma once

// Classical answer set semantics for literal programs.

#include "pasp/limits.h"
#include "pasp/literal.h"
#include "pasp/program.h"

#include <vector>

namespace pasp::classical {

/// Least fixpoint of T_P from ∅. Requires a simple program without
/// constraint rules.
Interpretation tp_fixpoint(const Program& program);

/// One application of T_P.
Interpretation tp_step(const Program& program, const Interpretation& current);

/// I is a model of the positive rule: head ∩ I ≠ ∅ or body ⊄ I. Constraint
/// rules are models iff their body is not contained in I.
bool is_model(const Interpretation& interpretation, const Rule& rule);
bool is_model(const Interpretation& interpretation, const Program& positive);

/// All subset-minimal consistent models of a positive program, or [Lit_P]
/// when there are none.
std::vector<Interpretation> minimal_models(const Program& positive, const Limits& limits = {});

/// All answer sets, sorted. Consistent answer sets are stable models that
/// satisfy every constraint rule; [Lit_P] is returned instead when the
/// constraint-free part admits only the inconsistent answer set.
std::vector<Interpretation> answer_sets(const Program& program, const Limits& limits = {});

}  // namespace pasp::classical
