#pragma once

#include "pasp/certainty.h"
#include "pasp/kernel.h"
#include "pasp/literal.h"

#include <span>
#include <vector>

namespace pasp {

/// One argument of the min() on the right-hand side of a rule constraint.
struct BoundTerm {
  enum class Kind {
    necessity,   ///< N(clause) under the distribution being constrained
    complement,  ///< 1 - guess, where guess is V(l) or N_V(e) of a naf item
    constant,    ///< the rule weight λ
  };

  Kind kind = Kind::constant;
  Clause clause;
  Certainty value;

  static BoundTerm necessity_of(Clause clause) { return {Kind::necessity, std::move(clause), {}}; }
  static BoundTerm complement_of(Clause clause, Certainty guess) {
    return {Kind::complement, std::move(clause), guess};
  }
  static BoundTerm constant(Certainty weight) { return {Kind::constant, {}, weight}; }

  friend bool operator==(const BoundTerm&, const BoundTerm&) = default;
};

/// N(head) >= min(terms), with min(∅) = 1 and an empty head standing for ⊥.
struct NecessityConstraint {
  Clause head;
  std::vector<BoundTerm> terms;

  friend bool operator==(const NecessityConstraint&, const NecessityConstraint&) = default;
};

/// min over `terms` evaluated against `pi`.
Certainty evaluate_bound(std::span<const BoundTerm> terms, const kernel::Distribution& pi);

bool holds(const NecessityConstraint& constraint, const kernel::Distribution& pi);

/// The least specific distribution satisfying every constraint.
///
/// Starts from π ≡ 1 and repeatedly lowers every world violating a head to
/// 1 - bound until nothing changes. The operator is monotone, so the limit
/// dominates every model and is itself a model.
kernel::Distribution tighten(std::span<const NecessityConstraint> constraints, const kernel::Base& base);

}  // namespace pasp
