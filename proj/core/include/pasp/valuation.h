#pragma once

#include "pasp/certainty.h"
#include "pasp/literal.h"

#include <map>
#include <vector>

namespace pasp {

/// Whether a valuation is keyed by literals (Lit_P -> [0,1]) or by head
/// clauses (heads(P) -> [0,1]).
enum class ValuationMode { literal, clausal };

/// Maps keys to certainties. Literal keys are stored as unit clauses; zero
/// values are never stored.
class Valuation {
 public:
  explicit Valuation(ValuationMode mode = ValuationMode::literal) : mode_(mode) {}

  ValuationMode mode() const { return mode_; }

  /// Stores `value` for `key`; a zero value erases the entry. Literal
  /// valuations only accept unit keys.
  void set(const Clause& key, Certainty value);
  void set(Literal key, Certainty value) { set(Clause::unit(key), value); }
  /// Raises the stored value to `value` if it is larger.
  void raise(const Clause& key, Certainty value);

  Certainty get(const Clause& key) const;
  Certainty get(Literal key) const { return get(Clause::unit(key)); }

  const std::map<Clause, Certainty>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  /// V^λ: keys with value >= level.
  std::vector<Clause> cut(Certainty level) const;
  /// V^{>λ}: keys with value > level.
  std::vector<Clause> strict_cut(Certainty level) const;
  /// Distinct stored values, largest first.
  std::vector<Certainty> levels() const;
  /// True iff every stored value equals 1.
  bool crisp() const;

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.mode_ == b.mode_ && a.entries_ == b.entries_;
  }
  friend bool operator<(const Valuation& a, const Valuation& b) { return a.entries_ < b.entries_; }

 private:
  ValuationMode mode_;
  std::map<Clause, Certainty> entries_;
};

/// One answer set as reported by a solver: its valuation, and whether the
/// possibility distribution it stands for is normalized.
struct AnswerSet {
  Valuation valuation;
  bool consistent = true;

  friend bool operator==(const AnswerSet& a, const AnswerSet& b) {
    return a.consistent == b.consistent && a.valuation == b.valuation;
  }
  friend bool operator<(const AnswerSet& a, const AnswerSet& b) {
    if (a.valuation < b.valuation) return true;
    if (b.valuation < a.valuation) return false;
    return a.consistent && !b.consistent;
  }
};

}  // namespace pasp
