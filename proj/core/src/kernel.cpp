#include "pasp/kernel.h"

#include "pasp/error.h"

#include <algorithm>
#include <set>
#include <string>

namespace pasp::kernel {

namespace {

constexpr unsigned kHardWorldBits = 30;

}  // namespace

Base::Base(std::vector<AtomId> atoms, unsigned max_atoms) : atoms_(std::move(atoms)) {
  if (atoms_.size() > max_atoms || atoms_.size() > kHardWorldBits)
    throw CapExceeded("instance too large: " + std::to_string(atoms_.size()) + " atoms exceed the world cap of " +
                      std::to_string(std::min(max_atoms, kHardWorldBits)));
  AtomId top = 0;
  for (AtomId a : atoms_) top = std::max(top, a + 1);
  position_.assign(top, -1);
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (position_[atoms_[i]] != -1) throw Error("duplicate atom in base");
    position_[atoms_[i]] = static_cast<int>(i);
  }
}

Base Base::first(std::size_t count, unsigned max_atoms) {
  std::vector<AtomId> atoms(count);
  for (std::size_t i = 0; i < count; ++i) atoms[i] = static_cast<AtomId>(i);
  return Base(std::move(atoms), max_atoms);
}

Base Base::of(std::span<const Clause> clauses, unsigned max_atoms) {
  std::set<AtomId> atoms;
  for (const Clause& c : clauses)
    for (Literal l : c) atoms.insert(l.atom());
  return Base(std::vector<AtomId>(atoms.begin(), atoms.end()), max_atoms);
}

std::optional<unsigned> Base::position(AtomId atom) const {
  if (atom >= position_.size() || position_[atom] < 0) return std::nullopt;
  return static_cast<unsigned>(position_[atom]);
}

ClauseMask Base::mask(const Clause& clause) const {
  ClauseMask m;
  for (Literal l : clause) {
    auto p = position(l.atom());
    if (!p) throw Error("unknown atom " + std::to_string(l.atom()) + " outside the base");
    (l.negated() ? m.negative : m.positive) |= std::uint32_t{1} << *p;
  }
  return m;
}

World Base::world_of(std::span<const AtomId> atoms) const {
  World w;
  for (AtomId a : atoms) {
    auto p = position(a);
    if (!p) throw Error("unknown atom " + std::to_string(a) + " outside the base");
    w.bits |= std::uint32_t{1} << *p;
  }
  return w;
}

Distribution::Distribution(Base base, Certainty fill) : base_(std::move(base)), table_(base_.world_count(), fill) {}

Distribution::Distribution(Base base, std::vector<Certainty> table) : base_(std::move(base)), table_(std::move(table)) {
  if (table_.size() != base_.world_count()) throw Error("distribution table size does not match its base");
}

bool Distribution::cap(World w, Certainty value) {
  Certainty& entry = table_[w.bits];
  if (value < entry) {
    entry = value;
    return true;
  }
  return false;
}

Certainty Distribution::height() const {
  Certainty h = Certainty::zero();
  for (const Certainty& c : table_) h = std::max(h, c);
  return h;
}

bool Distribution::is_normalized() const {
  return std::any_of(table_.begin(), table_.end(), [](const Certainty& c) { return c.is_one(); });
}

bool Distribution::is_vacuous() const {
  return std::all_of(table_.begin(), table_.end(), [](const Certainty& c) { return c.is_zero(); });
}

bool satisfies(const Base& base, World world, const Clause& clause) { return base.mask(clause).satisfied_by(world); }

Certainty possibility(const Distribution& pi, std::span<const Clause> cnf) {
  std::vector<ClauseMask> masks;
  masks.reserve(cnf.size());
  for (const Clause& c : cnf) masks.push_back(pi.base().mask(c));
  Certainty best = Certainty::zero();
  const auto n = static_cast<std::uint32_t>(pi.base().world_count());
  for (std::uint32_t bits = 0; bits < n; ++bits) {
    const World w{bits};
    if (std::all_of(masks.begin(), masks.end(), [w](const ClauseMask& m) { return m.satisfied_by(w); }))
      best = std::max(best, pi[w]);
  }
  return best;
}

Certainty necessity(const Distribution& pi, const Clause& clause) {
  const ClauseMask m = pi.base().mask(clause);
  Certainty worst = Certainty::zero();
  const auto n = static_cast<std::uint32_t>(pi.base().world_count());
  for (std::uint32_t bits = 0; bits < n; ++bits)
    if (!m.satisfied_by(World{bits}) && worst < pi[World{bits}]) worst = pi[World{bits}];
  return worst.complement();
}

Certainty necessity_of_cnf(const Distribution& pi, std::span<const Clause> cnf) {
  std::vector<ClauseMask> masks;
  for (const Clause& c : cnf) masks.push_back(pi.base().mask(c));
  Certainty worst = Certainty::zero();
  const auto n = static_cast<std::uint32_t>(pi.base().world_count());
  for (std::uint32_t bits = 0; bits < n; ++bits) {
    const World w{bits};
    if (!std::all_of(masks.begin(), masks.end(), [w](const ClauseMask& m) { return m.satisfied_by(w); }))
      worst = std::max(worst, pi[w]);
  }
  return worst.complement();
}

Specificity compare_specificity(const Distribution& a, const Distribution& b) {
  if (!(a.base() == b.base())) throw Error("specificity comparison across different bases");
  bool ge = true, le = true;
  for (std::size_t i = 0; i < a.table().size(); ++i) {
    if (a.table()[i] < b.table()[i]) ge = false;
    if (b.table()[i] < a.table()[i]) le = false;
  }
  if (ge && le) return Specificity::equal;
  if (ge) return Specificity::greater;
  if (le) return Specificity::less;
  return Specificity::incomparable;
}

Distribution least_specific(const Valuation& v, const Base& base) {
  std::vector<std::pair<ClauseMask, Certainty>> entries;
  for (const auto& [key, value] : v.entries()) entries.emplace_back(base.mask(key), value.complement());
  Distribution pi(base);
  const auto n = static_cast<std::uint32_t>(base.world_count());
  for (std::uint32_t bits = 0; bits < n; ++bits) {
    const World w{bits};
    for (const auto& [mask, cap] : entries)
      if (!mask.satisfied_by(w)) pi.cap(w, cap);
  }
  return pi;
}

bool entails(const Valuation& v, const Clause& clause, Certainty level, const Base& base) {
  return necessity(least_specific(v, base), clause) >= level;
}

bool clause_entailment(std::span<const Clause> clauses, const Clause& goal, unsigned max_atoms) {
  std::vector<Clause> all(clauses.begin(), clauses.end());
  all.push_back(goal);
  Base base;
  try {
    base = Base::of(all, max_atoms);
  } catch (const CapExceeded&) {
    throw CapExceeded("instance too large");
  }
  std::vector<ClauseMask> masks;
  for (const Clause& c : clauses) masks.push_back(base.mask(c));
  const ClauseMask g = base.mask(goal);
  const auto n = static_cast<std::uint32_t>(base.world_count());
  for (std::uint32_t bits = 0; bits < n; ++bits) {
    const World w{bits};
    if (g.satisfied_by(w)) continue;
    if (std::all_of(masks.begin(), masks.end(), [w](const ClauseMask& m) { return m.satisfied_by(w); })) return false;
  }
  return true;
}

}  // namespace pasp::kernel
