#pragma once

#include "pasp/certainty.h"
#include "pasp/kernel.h"
#include "pasp/literal.h"

#include <string_view>
#include <vector>

namespace pasp {

/// How multi-literal heads are read. Literal programs use strong disjunction
/// (';'); clausal programs have one head clause read as weak disjunction ('|')
/// and may use clauses in bodies.
enum class ProgramMode { literal, clausal };

enum class RuleKind { definite, simple, normal, strong_disjunctive, positive_clausal, clausal, constraint };

/// Most general rule kind present (constraint rules do not raise it).
enum class ProgramKind { definite, simple, normal, disjunctive, positive_clausal, clausal };

const char* to_string(RuleKind kind);
const char* to_string(ProgramKind kind);

struct BodyItem {
  Clause clause;
  bool naf = false;

  friend bool operator==(const BodyItem&, const BodyItem&) = default;
};

/// head ← body. An empty head is ⊥ (constraint rule); an empty body is ⊤ (fact).
struct Rule {
  Clause head;
  std::vector<BodyItem> body;

  bool is_constraint() const { return head.empty(); }
  bool is_fact() const { return body.empty(); }
  bool has_naf() const;
  std::vector<Clause> positive_body() const;
  std::vector<Clause> naf_body() const;

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct WeightedRule {
  Rule rule;
  Certainty weight = Certainty::one();

  friend bool operator==(const WeightedRule&, const WeightedRule&) = default;
};

RuleKind classify(const Rule& rule, ProgramMode mode);

/// A propositional possibilistic program. Atom ids index the symbol table;
/// the Herbrand base is every interned atom.
class Program {
 public:
  explicit Program(ProgramMode mode = ProgramMode::literal) : mode_(mode) {}
  Program(SymbolTable symbols, ProgramMode mode) : symbols_(std::move(symbols)), mode_(mode) {}

  AtomId atom(std::string_view name) { return symbols_.intern(name); }

  /// Throws Error when the weight is 0, when a literal program gets a
  /// multi-literal body clause, or when an atom is not interned.
  void add(Rule rule, Certainty weight = Certainty::one());

  const std::vector<WeightedRule>& rules() const { return rules_; }
  const SymbolTable& symbols() const { return symbols_; }
  ProgramMode mode() const { return mode_; }
  ProgramKind kind() const;

  bool has_constraints() const;
  bool has_naf() const;
  bool has_classical_negation() const;
  /// Every weight equals 1.
  bool crisp() const;

  /// B_P, ascending.
  std::vector<AtomId> herbrand() const;
  /// Lit_P = B_P ∪ ¬B_P, ascending.
  std::vector<Literal> literals() const;
  /// heads(P): the distinct non-⊥ head clauses, ascending.
  std::vector<Clause> heads() const;
  /// Distinct clauses occurring behind naf, ascending.
  std::vector<Clause> naf_clauses() const;
  /// cert(P), ascending.
  std::vector<Certainty> weights() const;
  kernel::Base base(unsigned max_atoms = Limits::kDefaultWorldAtoms) const;

  /// Same symbols and mode, different rules.
  Program with_rules(std::vector<WeightedRule> rules) const;

  friend bool operator==(const Program&, const Program&) = default;

 private:
  SymbolTable symbols_;
  ProgramMode mode_;
  std::vector<WeightedRule> rules_;
};

}  // namespace pasp
