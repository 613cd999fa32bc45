#pragma once

// Rules as necessity constraints on possibility distributions (simple and
// normal programs). Negation-as-failure over a guessed valuation contributes
// the Łukasiewicz complement 1 - V(l).

#include "pasp/certainty.h"
#include "pasp/constraint.h"
#include "pasp/kernel.h"
#include "pasp/limits.h"
#include "pasp/program.h"
#include "pasp/valuation.h"

#include <optional>
#include <vector>

namespace pasp::newsem {

/// One constraint per rule: N(l0) >= min(N(l1), …, 1 - V(l_{m+1}), …, λ).
/// `guess` is required iff the program uses naf. Throws Error on strong or
/// clausal programs.
std::vector<NecessityConstraint> constraints_for(const Program& program,
                                                 const std::optional<Valuation>& guess = std::nullopt);

/// The unique least specific model of unit-or-⊥ headed constraints.
kernel::Distribution least_specific_model(std::span<const NecessityConstraint> constraints,
                                          const kernel::Base& base);

/// V(l) = N(l) over Lit_P, zero entries omitted.
Valuation read_off(const Program& program, const kernel::Distribution& pi);

struct SimpleResult {
  Valuation valuation;
  kernel::Distribution distribution;
  /// π is normalized. A non-normalized π means P has no consistent answer set.
  bool consistent;
};

/// Answer set of a simple (naf-free) program.
SimpleResult simple_answer_set(const Program& program, const Limits& limits = {});

/// Every stable guess V over the literals that occur behind naf, with values
/// drawn from `grid` (cert⁺(P) when empty). Sorted, distinct.
std::vector<AnswerSet> normal_answer_sets(const Program& program, std::vector<Certainty> grid = {},
                                          const Limits& limits = {});

/// Two-valued answer sets on the grid {0,1}, projected to M = {l | N(l) = 1}.
/// Requires every weight to be 1. A vacuous distribution projects to Lit_P.
std::vector<Interpretation> crisp_answer_sets(const Program& program, const Limits& limits = {});

}  // namespace pasp::newsem
