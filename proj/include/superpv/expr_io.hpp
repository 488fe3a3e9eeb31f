#pragma once

#include <string>

#include "superpv/element.hpp"

namespace superpv {

// Text grammar for ring elements: body scalars as fractions of
// integer-coefficient polynomials, generators by name, products with `*`,
// localization as a `/ den^k` suffix, e.g. `(1/2)*t^2*th1*th2 / det0^1`.
// Printing is canonical and parse(print(x)) == x.
std::string elementToString(const SuperElem& e);
SuperElem parseElement(const std::string& text, const RingPtr& ring);

class Lexer;
// Parses one element expression from an open token stream, stopping at the
// first token that cannot extend the expression (',', ']', ...).
SuperElem parseElementFromLexer(Lexer& lex, const RingPtr& ring);

// Shared token stream for the expression and config grammars.
struct Token {
  enum Kind { Int, Name, Sym, End };
  Kind kind = End;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text, int startLine = 1);
  const Token& peek() const { return tok_; }
  Token next();
  [[noreturn]] void fail(const std::string& msg) const;
  bool atEnd() const { return tok_.kind == Token::End; }

 private:
  void advance();
  std::string text_;
  size_t pos_ = 0;
  int line_, col_ = 1;
  Token tok_;
};

}  // namespace superpv
