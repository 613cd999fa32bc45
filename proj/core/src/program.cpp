#include "pasp/program.h"

#include "pasp/error.h"

#include <algorithm>
#include <set>

namespace pasp {

const char* to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::definite: return "definite";
    case RuleKind::simple: return "simple";
    case RuleKind::normal: return "normal";
    case RuleKind::strong_disjunctive: return "strong_disjunctive";
    case RuleKind::positive_clausal: return "positive_clausal";
    case RuleKind::clausal: return "clausal";
    case RuleKind::constraint: return "constraint";
  }
  return "?";
}

const char* to_string(ProgramKind kind) {
  switch (kind) {
    case ProgramKind::definite: return "definite";
    case ProgramKind::simple: return "simple";
    case ProgramKind::normal: return "normal";
    case ProgramKind::disjunctive: return "disjunctive";
    case ProgramKind::positive_clausal: return "positive_clausal";
    case ProgramKind::clausal: return "clausal";
  }
  return "?";
}

bool Rule::has_naf() const {
  return std::any_of(body.begin(), body.end(), [](const BodyItem& b) { return b.naf; });
}

std::vector<Clause> Rule::positive_body() const {
  std::vector<Clause> out;
  for (const BodyItem& b : body)
    if (!b.naf) out.push_back(b.clause);
  return out;
}

std::vector<Clause> Rule::naf_body() const {
  std::vector<Clause> out;
  for (const BodyItem& b : body)
    if (b.naf) out.push_back(b.clause);
  return out;
}

namespace {

bool mentions_negation(const Rule& rule) {
  auto neg = [](const Clause& c) { return std::any_of(c.begin(), c.end(), [](Literal l) { return l.negated(); }); };
  return neg(rule.head) || std::any_of(rule.body.begin(), rule.body.end(), [&](const BodyItem& b) { return neg(b.clause); });
}

}  // namespace

RuleKind classify(const Rule& rule, ProgramMode mode) {
  if (rule.is_constraint()) return RuleKind::constraint;
  if (mode == ProgramMode::clausal) return rule.has_naf() ? RuleKind::clausal : RuleKind::positive_clausal;
  if (rule.head.size() > 1) return RuleKind::strong_disjunctive;
  if (rule.has_naf()) return RuleKind::normal;
  return mentions_negation(rule) ? RuleKind::simple : RuleKind::definite;
}

void Program::add(Rule rule, Certainty weight) {
  if (weight.is_zero()) throw Error("rule weight must be positive");
  auto check = [&](const Clause& c) {
    for (Literal l : c)
      if (l.atom() >= symbols_.size()) throw Error("rule mentions an atom that is not interned");
  };
  check(rule.head);
  for (const BodyItem& b : rule.body) {
    if (b.clause.empty()) throw Error("empty body clause");
    if (mode_ == ProgramMode::literal && !b.clause.is_unit())
      throw Error("clauses in rule bodies require a clausal program");
    check(b.clause);
  }
  rules_.push_back({std::move(rule), weight});
}

ProgramKind Program::kind() const {
  if (mode_ == ProgramMode::clausal) return has_naf() ? ProgramKind::clausal : ProgramKind::positive_clausal;
  ProgramKind k = ProgramKind::definite;
  for (const WeightedRule& r : rules_) {
    if (!r.rule.is_constraint() && r.rule.head.size() > 1) return ProgramKind::disjunctive;
    if (r.rule.has_naf())
      k = ProgramKind::normal;
    else if (k == ProgramKind::definite && mentions_negation(r.rule))
      k = ProgramKind::simple;
  }
  return k;
}

bool Program::has_constraints() const {
  return std::any_of(rules_.begin(), rules_.end(), [](const WeightedRule& r) { return r.rule.is_constraint(); });
}

bool Program::has_naf() const {
  return std::any_of(rules_.begin(), rules_.end(), [](const WeightedRule& r) { return r.rule.has_naf(); });
}

bool Program::has_classical_negation() const {
  return std::any_of(rules_.begin(), rules_.end(), [](const WeightedRule& r) { return mentions_negation(r.rule); });
}

bool Program::crisp() const {
  return std::all_of(rules_.begin(), rules_.end(), [](const WeightedRule& r) { return r.weight.is_one(); });
}

std::vector<AtomId> Program::herbrand() const {
  std::set<AtomId> atoms;
  for (const WeightedRule& r : rules_) {
    for (Literal l : r.rule.head) atoms.insert(l.atom());
    for (const BodyItem& b : r.rule.body)
      for (Literal l : b.clause) atoms.insert(l.atom());
  }
  return {atoms.begin(), atoms.end()};
}

std::vector<Literal> Program::literals() const {
  std::vector<Literal> out;
  for (AtomId a : herbrand()) {
    out.emplace_back(a, false);
    out.emplace_back(a, true);
  }
  return out;
}

std::vector<Clause> Program::heads() const {
  std::set<Clause> out;
  for (const WeightedRule& r : rules_)
    if (!r.rule.is_constraint()) out.insert(r.rule.head);
  return {out.begin(), out.end()};
}

std::vector<Clause> Program::naf_clauses() const {
  std::set<Clause> out;
  for (const WeightedRule& r : rules_)
    for (const BodyItem& b : r.rule.body)
      if (b.naf) out.insert(b.clause);
  return {out.begin(), out.end()};
}

std::vector<Certainty> Program::weights() const {
  std::set<Certainty> out;
  for (const WeightedRule& r : rules_) out.insert(r.weight);
  return {out.begin(), out.end()};
}

kernel::Base Program::base(unsigned max_atoms) const { return kernel::Base(herbrand(), max_atoms); }

Program Program::with_rules(std::vector<WeightedRule> rules) const {
  Program p(symbols_, mode_);
  p.rules_ = std::move(rules);
  return p;
}

}  // namespace pasp
