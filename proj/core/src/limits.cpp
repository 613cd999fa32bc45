#include "pasp/limits.h"

#include "pasp/error.h"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace pasp {

Limits Limits::from_environment() {
  Limits limits;
  if (const char* env = std::getenv("PASP_MAX_ATOMS"); env != nullptr && *env != '\0') {
    std::string_view text(env);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
      throw Error("PASP_MAX_ATOMS must be a non-negative integer");
    limits.max_atoms = value;
  }
  return limits;
}

Limits Limits::with_atoms(unsigned atoms) {
  Limits limits;
  limits.max_atoms = atoms;
  limits.max_literals = 2 * atoms;
  return limits;
}

}  // namespace pasp
