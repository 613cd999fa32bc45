#include "pasp/valuation.h"

#include "pasp/error.h"

#include <algorithm>

namespace pasp {

void Valuation::set(const Clause& key, Certainty value) {
  if (mode_ == ValuationMode::literal && !key.is_unit()) throw Error("literal valuation keyed by a non-unit clause");
  if (value.is_zero())
    entries_.erase(key);
  else
    entries_[key] = value;
}

void Valuation::raise(const Clause& key, Certainty value) {
  if (value > get(key)) set(key, value);
}

Certainty Valuation::get(const Clause& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? Certainty::zero() : it->second;
}

std::vector<Clause> Valuation::cut(Certainty level) const {
  std::vector<Clause> out;
  for (const auto& [key, value] : entries_)
    if (value >= level) out.push_back(key);
  return out;
}

std::vector<Clause> Valuation::strict_cut(Certainty level) const {
  std::vector<Clause> out;
  for (const auto& [key, value] : entries_)
    if (value > level) out.push_back(key);
  return out;
}

std::vector<Certainty> Valuation::levels() const {
  std::vector<Certainty> out;
  for (const auto& entry : entries_) out.push_back(entry.second);
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Valuation::crisp() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second.is_one(); });
}

}  // namespace pasp
