#include "pasp/certainty.h"

#include "pasp/error.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>

namespace pasp {

namespace {

constexpr int kMaxDigits = 17;

std::int64_t pow10(int k) {
  std::int64_t p = 1;
  while (k-- > 0) p *= 10;
  return p;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::int64_t to_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw Error("invalid certainty \"" + std::string(s) + "\"");
  return v;
}

}  // namespace

Certainty::Certainty(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("certainty with zero denominator");
  Rep r(num, den);
  if (r < Rep(0) || Rep(1) < r) throw Error("certainty outside [0,1]");
  value_ = r;
}

Certainty Certainty::parse(std::string_view text) {
  const std::string original(text);
  auto bad = [&]() { return Error("invalid certainty \"" + original + "\""); };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den) || num.size() > 18 || den.size() > 18) throw bad();
    return Certainty(to_int(num), to_int(den));
  }
  auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw bad();
  if (!whole.empty() && !all_digits(whole)) throw bad();
  if (dot != std::string_view::npos && !all_digits(frac)) throw bad();
  while (whole.size() > 1 && whole.front() == '0') whole.remove_prefix(1);
  while (!frac.empty() && frac.back() == '0') frac.remove_suffix(1);
  if (whole.size() > 1 || frac.size() > kMaxDigits) throw bad();
  const std::int64_t den = pow10(static_cast<int>(frac.size()));
  std::int64_t num = whole.empty() ? 0 : to_int(whole) * den;
  if (!frac.empty()) num += to_int(frac);
  return Certainty(num, den);
}

std::string Certainty::str() const {
  std::int64_t den = value_.denominator();
  const std::int64_t num = value_.numerator();
  if (den == 1) return std::to_string(num);
  int twos = 0, fives = 0;
  std::int64_t d = den;
  while (d % 2 == 0) d /= 2, ++twos;
  while (d % 5 == 0) d /= 5, ++fives;
  const int k = std::max(twos, fives);
  if (d != 1 || k > 18) return std::to_string(num) + "/" + std::to_string(den);
  // num/den < 1 here, so num * (10^k / den) < 10^k fits.
  const std::int64_t scaled = num * (pow10(k) / den);
  std::string digits = std::to_string(scaled);
  digits.insert(0, static_cast<std::size_t>(k) - digits.size(), '0');
  while (!digits.empty() && digits.back() == '0') digits.pop_back();
  return "0." + digits;
}

std::ostream& operator<<(std::ostream& os, const Certainty& c) { return os << c.str(); }

}  // namespace pasp
