#pragma once

#include "pasp/pasp.h"

#include <fstream>
#include <iterator>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pasp::testing {

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(PASP_TEST_DATA) + "/" + name, std::ios::binary);
  if (!in) throw std::runtime_error("missing test data " + name);
  return {std::istreambuf_iterator<char>(in), {}};
}

inline Program load(const std::string& name) { return parse_program(read_data(name)); }

/// Clause from surface text such as "a | -b"; atoms must already exist.
inline Clause clause(const Program& p, const std::string& text) {
  SymbolTable symbols = p.symbols();
  Query q = parse_query(text, symbols);
  if (symbols.size() != p.symbols().size()) throw std::runtime_error("unknown atom in " + text);
  return q.clause;
}

/// Valuation from (clause text, certainty text) pairs.
inline Valuation valuation(const Program& p, const std::vector<std::pair<std::string, std::string>>& entries,
                           ValuationMode mode = ValuationMode::literal) {
  Valuation v(mode);
  for (const auto& [key, value] : entries) v.set(clause(p, key), Certainty::parse(value));
  return v;
}

inline Interpretation interpretation(const Program& p, const std::vector<std::string>& literals) {
  Interpretation out;
  for (const auto& l : literals) out.insert(clause(p, l).literals().front());
  return out;
}

inline std::vector<Valuation> valuations_of(const std::vector<AnswerSet>& sets) {
  std::vector<Valuation> out;
  for (const auto& a : sets) out.push_back(a.valuation);
  return out;
}

}  // namespace pasp::testing
