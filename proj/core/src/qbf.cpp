#include "pasp/qbf.h"

#include "lexer.h"
#include "pasp/error.h"

#include <algorithm>
#include <set>

namespace pasp::qbf {

namespace {

using detail::Tok;
using detail::Token;
using detail::TokenStream;

bool keyword(const Token& t, std::string_view word) { return t.kind == Tok::ident && t.text == word; }

Literal parse_term_literal(TokenStream& ts, const Qbf2& q) {
  bool negated = false;
  while (ts.accept(Tok::minus)) negated = !negated;
  const Token& name = ts.expect(Tok::ident, "for a variable");
  auto id = q.symbols.find(name.text);
  if (!id) ts.fail(name, "variable '" + std::string(name.text) + "' is not quantified");
  return Literal(*id, negated);
}

Term parse_term(TokenStream& ts, const Qbf2& q) {
  const bool paren = ts.accept(Tok::lparen);
  Term t{parse_term_literal(ts, q)};
  while (ts.accept(Tok::amp)) t.push_back(parse_term_literal(ts, q));
  if (paren) ts.expect(Tok::rparen, "to close a term");
  return t;
}

}  // namespace

Qbf2 parse_qbf(std::string_view text) {
  TokenStream ts(detail::tokenize(text));
  Qbf2 q;
  auto bind = [&](std::vector<AtomId>& into) {
    while (ts.at(Tok::ident) && !keyword(ts.peek(), "forall")) {
      if (keyword(ts.peek(), "exists")) ts.fail(ts.peek(), "the existential block must come first");
      const Token& name = ts.take();
      if (q.symbols.find(name.text)) ts.fail(name, "variable '" + std::string(name.text) + "' is bound twice");
      into.push_back(q.symbols.intern(name.text));
    }
  };
  if (keyword(ts.peek(), "exists")) {
    ts.take();
    bind(q.exists_vars);
  }
  if (keyword(ts.peek(), "forall")) {
    ts.take();
    bind(q.forall_vars);
  }
  ts.expect(Tok::colon, "after the quantifier prefix");
  if (!ts.at(Tok::end)) {
    q.matrix.push_back(parse_term(ts, q));
    while (ts.accept(Tok::bar)) q.matrix.push_back(parse_term(ts, q));
  }
  if (!ts.at(Tok::end)) ts.fail(ts.peek(), "unexpected '" + std::string(ts.peek().text) + "' in the matrix");
  return q;
}

std::string format(const Qbf2& q) {
  std::string out;
  auto vars = [&](const char* word, const std::vector<AtomId>& ids) {
    if (ids.empty()) return;
    if (!out.empty()) out += " ";
    out += word;
    for (AtomId a : ids) out += " " + q.symbols.name(a);
  };
  vars("exists", q.exists_vars);
  vars("forall", q.forall_vars);
  out += out.empty() ? ":" : " :";
  for (std::size_t i = 0; i < q.matrix.size(); ++i) {
    out += i ? " | (" : " (";
    for (std::size_t k = 0; k < q.matrix[i].size(); ++k) {
      if (k) out += " & ";
      const Literal l = q.matrix[i][k];
      out += (l.negated() ? "-" : "") + q.symbols.name(l.atom());
    }
    out += ")";
  }
  return out;
}

Program reduce_qbf(const Qbf2& q) {
  Program p(ProgramMode::clausal);
  std::vector<AtomId> id(q.symbols.size());
  for (AtomId a : q.exists_vars) id[a] = p.atom(q.symbols.name(a));
  for (AtomId a : q.forall_vars) id[a] = p.atom(q.symbols.name(a));
  if (q.symbols.find("sat")) throw Error("the variable name 'sat' is reserved by the reduction");
  const AtomId sat = p.atom("sat");

  for (AtomId a : q.exists_vars) {
    const Literal x(id[a], false);
    p.add(Rule{Clause::unit(x), {BodyItem{Clause::unit(~x), true}}});
    p.add(Rule{Clause::unit(~x), {BodyItem{Clause::unit(x), true}}});
  }
  for (const Term& t : q.matrix) {
    std::vector<Literal> clause{Literal(sat)};
    for (Literal l : t) clause.push_back(~Literal(id[l.atom()], l.negated()));
    p.add(Rule{Clause(std::move(clause)), {}});
  }
  p.add(Rule{Clause::bottom(), {BodyItem{Clause::unit(Literal(sat)), true}}});
  return p;
}

bool eval_qbf(const Qbf2& q, unsigned max_vars) {
  const std::size_t n1 = q.exists_vars.size(), n2 = q.forall_vars.size();
  if (n1 + n2 > max_vars || n1 + n2 > 30) throw CapExceeded("QBF has too many variables for brute force");
  std::vector<int> slot(q.symbols.size(), -1);
  for (std::size_t i = 0; i < n1; ++i) slot[q.exists_vars[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < n2; ++i) slot[q.forall_vars[i]] = static_cast<int>(n1 + i);
  auto holds = [&](std::uint32_t bits) {
    return std::any_of(q.matrix.begin(), q.matrix.end(), [&](const Term& t) {
      return std::all_of(t.begin(), t.end(), [&](Literal l) {
        const int s = slot[l.atom()];
        if (s < 0) throw Error("QBF matrix mentions an unquantified variable");
        return (((bits >> s) & 1u) != 0) != l.negated();
      });
    });
  };
  for (std::uint32_t a = 0; a < (std::uint32_t{1} << n1); ++a) {
    bool all = true;
    for (std::uint32_t b = 0; b < (std::uint32_t{1} << n2) && all; ++b) all = holds(a | (b << n1));
    if (all) return true;
  }
  return false;
}

}  // namespace pasp::qbf
