#include "pasp/parser.h"

#include "lexer.h"
#include "pasp/error.h"

#include <optional>

namespace pasp {

namespace {

using detail::Tok;
using detail::Token;
using detail::TokenStream;

struct RawItem {
  std::vector<Literal> literals;
  bool naf = false;
  bool parenthesized = false;
  Token where;
};

struct RawStatement {
  Certainty weight = Certainty::one();
  std::vector<Literal> head;
  std::vector<RawItem> body;
};

Literal parse_literal(TokenStream& ts, SymbolTable& symbols) {
  bool negated = false;
  while (ts.accept(Tok::minus)) negated = !negated;
  const Token& name = ts.expect(Tok::ident, "for an atom");
  return Literal(symbols.intern(name.text), negated);
}

Certainty parse_weight(TokenStream& ts, const Token& number) {
  try {
    Certainty w = Certainty::parse(number.text);
    if (w.is_zero()) ts.fail(number, "weight must be in (0,1]");
    return w;
  } catch (const ParseError&) {
    throw;
  } catch (const Error&) {
    ts.fail(number, "weight must be in (0,1], found '" + std::string(number.text) + "'");
  }
}

class ProgramParser {
 public:
  explicit ProgramParser(std::string_view text) : ts_(detail::tokenize(text)) {}

  Program run() {
    std::vector<RawStatement> statements;
    while (!ts_.at(Tok::end)) statements.push_back(statement());
    const bool clausal = first_bar_.has_value();
    if (clausal && first_semicolon_) {
      const Token& later = first_bar_->line > first_semicolon_->line ||
                                   (first_bar_->line == first_semicolon_->line &&
                                    first_bar_->column > first_semicolon_->column)
                               ? *first_bar_
                               : *first_semicolon_;
      ts_.fail(later, "a program cannot mix strong (';') and weak ('|') disjunction");
    }
    Program program(symbols_, clausal ? ProgramMode::clausal : ProgramMode::literal);
    for (RawStatement& s : statements) {
      Rule rule;
      rule.head = Clause(std::move(s.head));
      for (RawItem& item : s.body) rule.body.push_back({Clause(std::move(item.literals)), item.naf});
      program.add(std::move(rule), s.weight);
    }
    return program;
  }

 private:
  RawStatement statement() {
    RawStatement s;
    if (ts_.at(Tok::number)) {
      const Token number = ts_.take();
      s.weight = parse_weight(ts_, number);
      ts_.expect(Tok::colon, "after a rule weight");
    }
    if (ts_.accept(Tok::if_)) {
      body(s);
    } else {
      s.head.push_back(parse_literal(ts_, symbols_));
      while (ts_.at(Tok::semicolon) || ts_.at(Tok::bar)) {
        const Token sep = ts_.take();
        note_separator(sep);
        s.head.push_back(parse_literal(ts_, symbols_));
      }
      if (ts_.accept(Tok::if_)) body(s);
    }
    ts_.expect(Tok::dot, "at the end of a rule");
    return s;
  }

  void body(RawStatement& s) {
    do {
      RawItem item;
      item.where = ts_.peek();
      item.naf = ts_.accept(Tok::not_);
      if (ts_.accept(Tok::lparen)) {
        item.parenthesized = true;
        item.literals.push_back(parse_literal(ts_, symbols_));
        while (ts_.at(Tok::bar) || ts_.at(Tok::semicolon)) {
          const Token sep = ts_.take();
          if (sep.kind == Tok::semicolon) ts_.fail(sep, "body clauses are built with '|'");
          note_separator(sep);
          if (item.naf && first_semicolon_)
            ts_.fail(item.where, "naf applied to a clause requires a clausal program");
          item.literals.push_back(parse_literal(ts_, symbols_));
        }
        ts_.expect(Tok::rparen, "to close a body clause");
      } else {
        item.literals.push_back(parse_literal(ts_, symbols_));
        if (ts_.at(Tok::bar)) ts_.fail(ts_.peek(), "a clause in a rule body must be parenthesized");
      }
      if (item.naf && item.literals.size() > 1) naf_clause_ = item.where;
      s.body.push_back(std::move(item));
    } while (ts_.accept(Tok::comma));
  }

  void note_separator(const Token& sep) {
    if (sep.kind == Tok::semicolon) {
      if (!first_semicolon_) first_semicolon_ = sep;
      if (naf_clause_) ts_.fail(*naf_clause_, "naf applied to a clause requires a clausal program");
    } else if (!first_bar_) {
      first_bar_ = sep;
    }
  }

  TokenStream ts_;
  SymbolTable symbols_;
  std::optional<Token> first_semicolon_;
  std::optional<Token> first_bar_;
  std::optional<Token> naf_clause_;
};

}  // namespace

Program parse_program(std::string_view text) { return ProgramParser(text).run(); }

Query parse_query(std::string_view text, SymbolTable& symbols) {
  TokenStream ts(detail::tokenize(text));
  Query q;
  const bool paren = ts.accept(Tok::lparen);
  std::vector<Literal> lits{parse_literal(ts, symbols)};
  while (ts.accept(Tok::bar)) lits.push_back(parse_literal(ts, symbols));
  if (paren) ts.expect(Tok::rparen, "to close the query clause");
  q.clause = Clause(std::move(lits));
  if (ts.accept(Tok::at)) {
    const Token number = ts.expect(Tok::number, "for the query level");
    try {
      q.level = Certainty::parse(number.text);
    } catch (const Error&) {
      ts.fail(number, "query level must be in [0,1], found '" + std::string(number.text) + "'");
    }
  }
  if (!ts.at(Tok::end)) ts.fail(ts.peek(), "unexpected '" + std::string(ts.peek().text) + "' after the query");
  return q;
}

}  // namespace pasp
