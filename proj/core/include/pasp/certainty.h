#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace pasp {

/// An exact certainty degree in [0,1].
///
/// Backed by a normalized 64-bit rational. Every operation the semantics
/// need (complement, min, max, comparison) is closed over the rationals, so
/// fixpoint equality checks such as V(l) = N(l) are exact.
class Certainty {
 public:
  using Rep = boost::rational<std::int64_t>;

  Certainty() = default;
  /// Throws Error unless 0 <= num/den <= 1.
  Certainty(std::int64_t num, std::int64_t den = 1);

  /// Accepts decimals ("0.25", ".5", "1") and fractions ("1/3").
  static Certainty parse(std::string_view text);

  static Certainty zero() { return Certainty(); }
  static Certainty one() { return Certainty(1); }
  static Certainty half() { return Certainty(1, 2); }

  /// 1 - c.
  Certainty complement() const { return Certainty(Rep(1) - value_, Unchecked{}); }

  bool is_zero() const { return value_.numerator() == 0; }
  bool is_one() const { return value_.numerator() == value_.denominator(); }
  std::int64_t numerator() const { return value_.numerator(); }
  std::int64_t denominator() const { return value_.denominator(); }
  const Rep& rep() const { return value_; }

  /// Exact decimal when the denominator is of the form 2^a 5^b, "p/q" otherwise.
  std::string str() const;

  friend bool operator==(const Certainty& a, const Certainty& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Certainty& a, const Certainty& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  struct Unchecked {};
  Certainty(Rep value, Unchecked) : value_(value) {}

  Rep value_{0};
};

std::ostream& operator<<(std::ostream& os, const Certainty& c);

}  // namespace pasp
