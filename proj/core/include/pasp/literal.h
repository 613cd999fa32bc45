#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pasp {

/// Dense atom id, assigned in order of first appearance.
using AtomId = std::uint32_t;

/// An atom or its classical negation. Ordered by atom id, then sign.
class Literal {
 public:
  constexpr Literal() = default;
  constexpr explicit Literal(AtomId atom, bool negated = false)
      : code_((atom << 1) | (negated ? 1u : 0u)) {}

  constexpr AtomId atom() const { return code_ >> 1; }
  constexpr bool negated() const { return (code_ & 1u) != 0; }
  constexpr std::uint32_t code() const { return code_; }

  /// Classical negation; applying it twice yields the original literal.
  constexpr Literal operator~() const { return from_code(code_ ^ 1u); }

  static constexpr Literal from_code(std::uint32_t code) {
    Literal l;
    l.code_ = code;
    return l;
  }

  friend constexpr auto operator<=>(const Literal&, const Literal&) = default;

 private:
  std::uint32_t code_ = 0;
};

/// A finite disjunction of literals, kept sorted and duplicate-free so equal
/// clauses compare equal. The empty clause is the internal sentinel for ⊥.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> literals);
  Clause(std::initializer_list<Literal> literals);

  static Clause unit(Literal l) { return Clause({l}); }
  static Clause bottom() { return Clause(); }

  const std::vector<Literal>& literals() const { return literals_; }
  auto begin() const { return literals_.begin(); }
  auto end() const { return literals_.end(); }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }
  bool is_bottom() const { return literals_.empty(); }
  bool is_unit() const { return literals_.size() == 1; }
  /// Contains some atom together with its negation.
  bool tautology() const { return tautology_; }
  bool contains(Literal l) const;
  /// Every literal of this clause occurs in `other`.
  bool subset_of(const Clause& other) const;

  /// The disjunction of both clauses.
  Clause merged(const Clause& other) const;
  /// ¬(l1 ∨ … ∨ lk) as the CNF {¬l1, …, ¬lk} of unit clauses.
  std::vector<Clause> negation() const;

  friend bool operator==(const Clause& a, const Clause& b) { return a.literals_ == b.literals_; }
  friend auto operator<=>(const Clause& a, const Clause& b) { return a.literals_ <=> b.literals_; }

 private:
  void normalize();

  std::vector<Literal> literals_;
  bool tautology_ = false;
};

/// A set of literals (an interpretation I ⊆ Lit_P).
using Interpretation = std::set<Literal>;

/// No complementary pair l, ¬l.
bool is_consistent(const Interpretation& interpretation);

/// Interns atom names to dense ids.
class SymbolTable {
 public:
  AtomId intern(std::string_view name);
  std::optional<AtomId> find(std::string_view name) const;
  const std::string& name(AtomId atom) const { return names_.at(atom); }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  friend bool operator==(const SymbolTable& a, const SymbolTable& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, AtomId, std::less<>> ids_;
};

}  // namespace pasp
