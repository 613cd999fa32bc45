#pragma once

#include "pasp/error.h"

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pasp::detail {

enum class Tok {
  ident,
  number,
  colon,
  if_,  // ":-"
  dot,
  comma,
  semicolon,
  bar,
  lparen,
  rparen,
  minus,
  not_,
  at,
  amp,
  end,
};

const char* describe(Tok kind);

struct Token {
  Tok kind = Tok::end;
  std::string_view text;
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Splits `text` into tokens; "%" comments and whitespace are skipped.
/// Throws ParseError on characters outside the token set.
std::vector<Token> tokenize(std::string_view text);

/// Cursor over a token vector with error helpers.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  const Token& take() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool accept(Tok kind) {
    if (!at(kind)) return false;
    take();
    return true;
  }
  const Token& expect(Tok kind, std::string_view context);

  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw ParseError(at.line, at.column, message);
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace pasp::detail
