#pragma once

#include "pasp/certainty.h"
#include "pasp/error.h"
#include "pasp/limits.h"
#include "pasp/program.h"
#include "pasp/reduct.h"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace pasp::detail {

// Mixed-radix counter; `next` returns false after the last combination.
class Odometer {
 public:
  explicit Odometer(std::vector<std::size_t> radix) : digits_(radix.size(), 0), radix_(std::move(radix)) {}
  Odometer(std::size_t slots, std::size_t radix) : Odometer(std::vector<std::size_t>(slots, radix)) {}

  const std::vector<std::size_t>& digits() const { return digits_; }
  std::size_t operator[](std::size_t i) const { return digits_[i]; }

  bool next() {
    std::size_t k = 0;
    while (k < digits_.size() && digits_[k] + 1 >= radix_[k]) digits_[k++] = 0;
    if (k == digits_.size()) return false;
    ++digits_[k];
    return true;
  }

 private:
  std::vector<std::size_t> digits_;
  std::vector<std::size_t> radix_;
};

/// Product of `radix`, throwing CapExceeded beyond `limits.max_guesses`.
inline std::uint64_t checked_product(const std::vector<std::size_t>& radix, const Limits& limits,
                                     const char* what = "guess space") {
  std::uint64_t total = 1;
  for (std::size_t r : radix) {
    total *= std::max<std::size_t>(r, 1);
    if (total > limits.max_guesses)
      throw CapExceeded(std::string(what) + " exceeds the cap of " + std::to_string(limits.max_guesses));
  }
  return total;
}

inline std::vector<Certainty> default_grid(const Program& program, std::vector<Certainty> grid) {
  if (grid.empty()) return cert_plus(program);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

/// Distinct literals occurring behind naf in a literal program.
inline std::vector<Literal> naf_literals(const Program& program) {
  std::vector<Literal> out;
  for (const Clause& c : program.naf_clauses()) out.push_back(c.literals().front());
  return out;
}

}  // namespace pasp::detail
