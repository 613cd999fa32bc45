#include "lexer.h"

#include <algorithm>
#include <cctype>

namespace pasp::detail {

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::ident: return "identifier";
    case Tok::number: return "number";
    case Tok::colon: return "':'";
    case Tok::if_: return "':-'";
    case Tok::dot: return "'.'";
    case Tok::comma: return "','";
    case Tok::semicolon: return "';'";
    case Tok::bar: return "'|'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::minus: return "'-'";
    case Tok::not_: return "'not'";
    case Tok::at: return "'@'";
    case Tok::amp: return "'&'";
    case Tok::end: return "end of input";
  }
  return "?";
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n')
        ++line, col = 1;
      else
        ++col;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    std::size_t len = 1;
    if (ident_start(c)) {
      while (i + len < text.size() && ident_char(text[i + len])) ++len;
      t.kind = text.substr(i, len) == "not" ? Tok::not_ : Tok::ident;
    } else if (digit(c)) {
      while (i + len < text.size() && digit(text[i + len])) ++len;
      if (i + len + 1 < text.size() && (text[i + len] == '.' || text[i + len] == '/') && digit(text[i + len + 1])) {
        ++len;
        while (i + len < text.size() && digit(text[i + len])) ++len;
      }
      t.kind = Tok::number;
    } else if (c == ':') {
      if (i + 1 < text.size() && text[i + 1] == '-') {
        t.kind = Tok::if_;
        len = 2;
      } else {
        t.kind = Tok::colon;
      }
    } else {
      switch (c) {
        case '.': t.kind = Tok::dot; break;
        case ',': t.kind = Tok::comma; break;
        case ';': t.kind = Tok::semicolon; break;
        case '|': t.kind = Tok::bar; break;
        case '(': t.kind = Tok::lparen; break;
        case ')': t.kind = Tok::rparen; break;
        case '-': t.kind = Tok::minus; break;
        case '@': t.kind = Tok::at; break;
        case '&': t.kind = Tok::amp; break;
        default:
          throw ParseError(line, col, std::string("unexpected character '") + c + "'");
      }
    }
    t.text = text.substr(i, len);
    out.push_back(t);
    advance(len);
  }
  Token eof;
  eof.kind = Tok::end;
  eof.line = line;
  eof.column = col;
  out.push_back(eof);
  return out;
}

const Token& TokenStream::expect(Tok kind, std::string_view context) {
  if (!at(kind)) {
    const Token& t = peek();
    std::string found = t.kind == Tok::end ? "end of input" : "'" + std::string(t.text) + "'";
    fail(t, std::string("expected ") + describe(kind) + " " + std::string(context) + ", found " + found);
  }
  return take();
}

}  // namespace pasp::detail
