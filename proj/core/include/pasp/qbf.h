#pragma once

// ∃X1 ∀X2 · φ with φ in disjunctive normal form, and its reduction to a
// crisp clausal program.

#include "pasp/limits.h"
#include "pasp/literal.h"
#include "pasp/program.h"

#include <string>
#include <string_view>
#include <vector>

namespace pasp::qbf {

/// A conjunction of literals.
using Term = std::vector<Literal>;

struct Qbf2 {
  SymbolTable symbols;
  std::vector<AtomId> exists_vars;
  std::vector<AtomId> forall_vars;
  std::vector<Term> matrix;

  friend bool operator==(const Qbf2&, const Qbf2&) = default;
};

/// "exists p1 p2 forall q1 q2 : (p1 & q1) | (p2 & -q2)". The matrix may be
/// empty (false). Throws ParseError on malformed text, on a variable bound
/// twice and on free matrix variables.
Qbf2 parse_qbf(std::string_view text);

std::string format(const Qbf2& q);

/// The program  x :- not -x.  -x :- not x.  for x ∈ X1, one fact ¬θ_t | sat
/// per term, and  :- not sat.  Throws Error when a variable is named "sat".
Program reduce_qbf(const Qbf2& q);

/// Brute force. Throws CapExceeded beyond `max_vars` variables.
bool eval_qbf(const Qbf2& q, unsigned max_vars = Limits::kDefaultWorldAtoms);

}  // namespace pasp::qbf
