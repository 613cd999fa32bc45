#pragma once

// Surface syntax:
//
//   program   := { statement }
//   statement := [ weight ":" ] ( head [ ":-" body ] | ":-" body ) "."
//   head      := literal { ";" literal }       strong disjunction
//              | literal { "|" literal }       weak disjunction (clause)
//   body      := item { "," item }
//   item      := [ "not" ] ( literal | "(" literal { "|" literal } ")" )
//   literal   := { "-" } identifier
//
// Weights are decimals or fractions in (0,1] and default to 1. "%" starts a
// line comment. ';' and '|' never occur in the same program.

#include "pasp/certainty.h"
#include "pasp/literal.h"
#include "pasp/program.h"

#include <optional>
#include <string_view>

namespace pasp {

/// Throws ParseError (with line and column) on malformed input.
Program parse_program(std::string_view text);

struct Query {
  Clause clause;
  std::optional<Certainty> level;
};

/// Parses `clause [@ level]`. Unknown atoms are interned into `symbols`.
Query parse_query(std::string_view text, SymbolTable& symbols);

}  // namespace pasp
