#include "pasp/printer.h"

#include <algorithm>


namespace pasp {

std::string format(Literal literal, const SymbolTable& symbols) {
  return (literal.negated() ? "-" : "") + symbols.name(literal.atom());
}

std::string format(const Clause& clause, const SymbolTable& symbols, std::string_view separator) {
  if (clause.empty()) return "#false";
  std::vector<Literal> ordered(clause.begin(), clause.end());
  std::sort(ordered.begin(), ordered.end(), [&](Literal x, Literal y) {
    const auto& nx = symbols.name(x.atom());
    const auto& ny = symbols.name(y.atom());
    return nx != ny ? nx < ny : x.negated() < y.negated();
  });
  std::string out;
  for (Literal l : ordered) {
    if (!out.empty()) out += separator;
    out += format(l, symbols);
  }
  return out;
}

namespace {

std::string body_item(const BodyItem& item, const SymbolTable& symbols) {
  std::string text = item.clause.is_unit() ? format(item.clause, symbols) : "(" + format(item.clause, symbols) + ")";
  return item.naf ? "not " + text : text;
}

}  // namespace

std::string format(const WeightedRule& rule, const SymbolTable& symbols, ProgramMode mode) {
  std::string out;
  if (!rule.weight.is_one()) out += rule.weight.str() + ": ";
  if (!rule.rule.is_constraint())
    out += format(rule.rule.head, symbols, mode == ProgramMode::clausal ? " | " : "; ");
  if (!rule.rule.is_fact()) {
    out += rule.rule.is_constraint() ? ":- " : " :- ";
    for (std::size_t i = 0; i < rule.rule.body.size(); ++i) {
      if (i) out += ", ";
      out += body_item(rule.rule.body[i], symbols);
    }
  }
  return out + ".";
}

std::string format(const Program& program) {
  std::string out;
  for (const WeightedRule& r : program.rules()) out += format(r, program.symbols(), program.mode()) + "\n";
  return out;
}

std::string format(const Valuation& valuation, const SymbolTable& symbols) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : valuation.entries()) {
    if (!first) out += ", ";
    first = false;
    out += key.is_unit() ? format(key, symbols) : "(" + format(key, symbols) + ")";
    out += "^" + value.str();
  }
  return out + "}";
}

std::string format(const Interpretation& interpretation, const SymbolTable& symbols) {
  std::string out = "{";
  bool first = true;
  for (Literal l : interpretation) {
    if (!first) out += ", ";
    first = false;
    out += format(l, symbols);
  }
  return out + "}";
}

}  // namespace pasp
