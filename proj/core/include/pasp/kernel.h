#pragma once

// Possibility distributions over explicitly enumerated worlds, and the
// possibility / necessity measures they induce.

#include "pasp/certainty.h"
#include "pasp/limits.h"
#include "pasp/literal.h"
#include "pasp/valuation.h"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pasp::kernel {

/// A world ω ⊆ base, as a bitmask over positions of the base.
struct World {
  std::uint32_t bits = 0;

  bool contains(unsigned position) const { return (bits >> position) & 1u; }
  friend bool operator==(World, World) = default;
};

/// A clause compiled against a base: ω ⊨ c iff ω meets `positive` or misses
/// part of `negative`.
struct ClauseMask {
  std::uint32_t positive = 0;
  std::uint32_t negative = 0;

  bool satisfied_by(World w) const { return (w.bits & positive) != 0 || (~w.bits & negative) != 0; }
};

/// Ordered atom list spanning the world set Ω = 2^base.
class Base {
 public:
  Base() = default;
  /// Throws CapExceeded when `atoms` has more than `max_atoms` entries.
  explicit Base(std::vector<AtomId> atoms, unsigned max_atoms = Limits::kDefaultWorldAtoms);
  /// The atoms 0 … count-1, in order.
  static Base first(std::size_t count, unsigned max_atoms = Limits::kDefaultWorldAtoms);
  /// The atoms occurring in `clauses`, ascending.
  static Base of(std::span<const Clause> clauses, unsigned max_atoms = Limits::kDefaultWorldAtoms);

  const std::vector<AtomId>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  std::size_t world_count() const { return std::size_t{1} << atoms_.size(); }
  std::optional<unsigned> position(AtomId atom) const;

  /// Throws Error("unknown atom …") if the clause mentions an atom outside the base.
  ClauseMask mask(const Clause& clause) const;
  /// The world containing exactly `atoms` (each must be in the base).
  World world_of(std::span<const AtomId> atoms) const;

  friend bool operator==(const Base& a, const Base& b) { return a.atoms_ == b.atoms_; }

 private:
  std::vector<AtomId> atoms_;
  std::vector<int> position_;
};

/// π: Ω -> [0,1], stored densely by world bitmask.
class Distribution {
 public:
  explicit Distribution(Base base, Certainty fill = Certainty::one());
  Distribution(Base base, std::vector<Certainty> table);

  const Base& base() const { return base_; }
  const std::vector<Certainty>& table() const { return table_; }
  Certainty operator[](World w) const { return table_[w.bits]; }
  void set(World w, Certainty value) { table_[w.bits] = value; }
  /// π(ω) := min(π(ω), value); returns true if the entry changed.
  bool cap(World w, Certainty value);

  Certainty height() const;
  /// Some world has possibility 1.
  bool is_normalized() const;
  /// Every world has possibility 0.
  bool is_vacuous() const;

  friend bool operator==(const Distribution& a, const Distribution& b) {
    return a.base_ == b.base_ && a.table_ == b.table_;
  }
  friend bool operator<(const Distribution& a, const Distribution& b) { return a.table_ < b.table_; }

 private:
  Base base_;
  std::vector<Certainty> table_;
};

/// Result of the pointwise specificity order. `greater` means the first
/// argument is strictly less specific (pointwise ≥ and different).
enum class Specificity { less, greater, equal, incomparable };

bool satisfies(const Base& base, World world, const Clause& clause);

/// Π(φ) for a CNF φ (an empty CNF is ⊤): max π(ω) over worlds satisfying
/// every clause, 0 if there are none.
Certainty possibility(const Distribution& pi, std::span<const Clause> cnf);

/// N(c) = 1 - Π(¬c).
Certainty necessity(const Distribution& pi, const Clause& clause);

/// N(φ) for a CNF φ, computed directly as 1 - max π(ω) over countermodels.
Certainty necessity_of_cnf(const Distribution& pi, std::span<const Clause> cnf);

/// Throws Error when the bases differ.
Specificity compare_specificity(const Distribution& a, const Distribution& b);

/// The greatest π with N(e) >= λ for every entry (e, λ) of `v`:
/// π(ω) = min{1 - λ | (e, λ) ∈ v, ω ⊭ e}, and 1 if ω violates nothing.
Distribution least_specific(const Valuation& v, const Base& base);

/// V ⊨ e^λ, i.e. N(e) >= λ under least_specific(v, base).
bool entails(const Valuation& v, const Clause& clause, Certainty level, const Base& base);

/// Classical entailment by truth table over the atoms of `clauses` and `goal`.
/// Throws CapExceeded("instance too large") beyond `max_atoms`.
bool clause_entailment(std::span<const Clause> clauses, const Clause& goal,
                       unsigned max_atoms = Limits::kDefaultWorldAtoms);

}  // namespace pasp::kernel
