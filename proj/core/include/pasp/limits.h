#pragma once

#include <cstdint>

namespace pasp {

/// Enumeration caps shared by every solver. All solvers are explicit
/// enumerators, so these bound the exponential parts of each search.
struct Limits {
  static constexpr unsigned kDefaultWorldAtoms = 20;
  static constexpr unsigned kDefaultLiterals = 16;
  static constexpr std::uint64_t kDefaultGuesses = std::uint64_t{1} << 20;

  /// Largest atom count for which a possibility distribution is tabulated.
  unsigned max_atoms = kDefaultWorldAtoms;
  /// Largest |Lit_P| for guess-and-check over interpretations.
  unsigned max_literals = kDefaultLiterals;
  /// Largest number of guesses / choice functions tried by one solver call.
  std::uint64_t max_guesses = kDefaultGuesses;

  /// Defaults, with `PASP_MAX_ATOMS` overriding the world cap when set.
  static Limits from_environment();
  /// Caps scaled from a single atom budget: worlds over `atoms`, guess-and-check
  /// over `2 * atoms` literals.
  static Limits with_atoms(unsigned atoms);
};

}  // namespace pasp
