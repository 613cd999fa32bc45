#include "pasp/constraint.h"

#include <algorithm>

namespace pasp {

Certainty evaluate_bound(std::span<const BoundTerm> terms, const kernel::Distribution& pi) {
  Certainty bound = Certainty::one();
  for (const BoundTerm& t : terms) {
    switch (t.kind) {
      case BoundTerm::Kind::necessity:
        bound = std::min(bound, kernel::necessity(pi, t.clause));
        break;
      case BoundTerm::Kind::complement:
        bound = std::min(bound, t.value.complement());
        break;
      case BoundTerm::Kind::constant:
        bound = std::min(bound, t.value);
        break;
    }
    if (bound.is_zero()) break;
  }
  return bound;
}

bool holds(const NecessityConstraint& constraint, const kernel::Distribution& pi) {
  return kernel::necessity(pi, constraint.head) >= evaluate_bound(constraint.terms, pi);
}

kernel::Distribution tighten(std::span<const NecessityConstraint> constraints, const kernel::Base& base) {
  kernel::Distribution pi(base);
  std::vector<kernel::ClauseMask> heads;
  heads.reserve(constraints.size());
  for (const auto& c : constraints) heads.push_back(base.mask(c.head));
  const auto n = static_cast<std::uint32_t>(base.world_count());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
      const Certainty bound = evaluate_bound(constraints[i].terms, pi);
      if (bound.is_zero()) continue;
      const Certainty cap = bound.complement();
      for (std::uint32_t bits = 0; bits < n; ++bits) {
        const kernel::World w{bits};
        if (!heads[i].satisfied_by(w) && pi.cap(w, cap)) changed = true;
      }
    }
  }
  return pi;
}

}  // namespace pasp
