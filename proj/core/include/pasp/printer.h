#pragma once

#include "pasp/literal.h"
#include "pasp/program.h"
#include "pasp/valuation.h"

#include <string>
#include <string_view>

namespace pasp {

std::string format(Literal literal, const SymbolTable& symbols);
/// Literals ordered by atom name and joined by `separator`; ⊥ prints as "#false".
std::string format(const Clause& clause, const SymbolTable& symbols, std::string_view separator = " | ");
std::string format(const WeightedRule& rule, const SymbolTable& symbols, ProgramMode mode);
/// Program text that parses back to p up to atom numbering, and prints identically.
std::string format(const Program& program);
/// "{a^0.8, (a | b)^1}" with entries in key order.
std::string format(const Valuation& valuation, const SymbolTable& symbols);
std::string format(const Interpretation& interpretation, const SymbolTable& symbols);

}  // namespace pasp
