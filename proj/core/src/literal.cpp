#include "pasp/literal.h"

#include <algorithm>

namespace pasp {

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) { normalize(); }

Clause::Clause(std::initializer_list<Literal> literals) : literals_(literals) { normalize(); }

void Clause::normalize() {
  std::sort(literals_.begin(), literals_.end());
  literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
  tautology_ = false;
  for (std::size_t i = 1; i < literals_.size(); ++i)
    if (literals_[i].atom() == literals_[i - 1].atom()) tautology_ = true;
}

bool Clause::contains(Literal l) const { return std::binary_search(literals_.begin(), literals_.end(), l); }

bool Clause::subset_of(const Clause& other) const {
  return std::includes(other.literals_.begin(), other.literals_.end(), literals_.begin(), literals_.end());
}

Clause Clause::merged(const Clause& other) const {
  std::vector<Literal> all = literals_;
  all.insert(all.end(), other.literals_.begin(), other.literals_.end());
  return Clause(std::move(all));
}

std::vector<Clause> Clause::negation() const {
  std::vector<Clause> cnf;
  cnf.reserve(literals_.size());
  for (Literal l : literals_) cnf.push_back(Clause::unit(~l));
  return cnf;
}

bool is_consistent(const Interpretation& interpretation) {
  for (Literal l : interpretation)
    if (!l.negated() && interpretation.count(~l)) return false;
  return true;
}

AtomId SymbolTable::intern(std::string_view name) {
  if (auto it = ids_.find(name); it != ids_.end()) return it->second;
  const auto id = static_cast<AtomId>(names_.size());
  names_.emplace_back(name);
  ids_.emplace(std::string(name), id);
  return id;
}

std::optional<AtomId> SymbolTable::find(std::string_view name) const {
  if (auto it = ids_.find(name); it != ids_.end()) return it->second;
  return std::nullopt;
}

}  // namespace pasp
