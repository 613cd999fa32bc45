#pragma once

// Strong possibilistic disjunction: a head l0;…;lk is read as
// max(N(l0), …, N(lk)), which induces a choice between disjuncts.

#include "pasp/certainty.h"
#include "pasp/constraint.h"
#include "pasp/kernel.h"
#include "pasp/limits.h"
#include "pasp/program.h"
#include "pasp/valuation.h"

#include <optional>
#include <vector>

namespace pasp::strong {

/// max(N(l) | l ∈ head) >= min(terms); an empty head stands for N(⊥).
struct StrongConstraint {
  Clause head;
  std::vector<BoundTerm> terms;

  friend bool operator==(const StrongConstraint&, const StrongConstraint&) = default;
};

bool holds(const StrongConstraint& constraint, const kernel::Distribution& pi);

/// One constraint per rule of a literal program. `guess` is required iff
/// the program uses naf.
std::vector<StrongConstraint> constraints_strong(const Program& program,
                                                 const std::optional<Valuation>& guess = std::nullopt);

/// The minimally specific models: for every choice of one head literal per
/// disjunctive constraint, solve the resulting unit-headed system, keep the
/// solutions that satisfy the original constraints, and return the
/// pointwise-maximal ones (sorted, distinct).
std::vector<kernel::Distribution> min_specific_models(std::span<const StrongConstraint> constraints,
                                                      const kernel::Base& base, const Limits& limits = {});

/// Stable guesses over naf literals drawn from `grid` (cert⁺(P) when empty).
std::vector<AnswerSet> strong_answer_sets(const Program& program, std::vector<Certainty> grid = {},
                                          const Limits& limits = {});

/// Two-valued answer sets on {0,1}, projected to M = {l | N(l) = 1}.
/// Requires every weight to be 1.
std::vector<Interpretation> crisp_answer_sets(const Program& program, const Limits& limits = {});

}  // namespace pasp::strong
