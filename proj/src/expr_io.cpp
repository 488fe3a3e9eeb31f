#include "superpv/expr_io.hpp"

#include <cctype>
#include <sstream>

#include "superpv/errors.hpp"

namespace superpv {

Lexer::Lexer(const std::string& text, int startLine) : text_(text), line_(startLine) {
  advance();
}

void Lexer::fail(const std::string& msg) const {
  throw ParseError(msg, tok_.line, tok_.col);
}

Token Lexer::next() {
  Token t = tok_;
  advance();
  return t;
}

void Lexer::advance() {
  while (pos_ < text_.size()) {
    char c = text_[pos_];
    if (c == '#') {  // comment to end of line
      while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      continue;
    }
    if (c == '\n') {
      ++line_;
      col_ = 1;
      ++pos_;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col_;
      ++pos_;
      continue;
    }
    break;
  }
  tok_.line = line_;
  tok_.col = col_;
  if (pos_ >= text_.size()) {
    tok_.kind = Token::End;
    tok_.text.clear();
    return;
  }
  char c = text_[pos_];
  if (std::isdigit(static_cast<unsigned char>(c))) {
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
      ++col_;
    }
    tok_.kind = Token::Int;
    tok_.text = text_.substr(start, pos_ - start);
    return;
  }
  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      ++col_;
    }
    tok_.kind = Token::Name;
    tok_.text = text_.substr(start, pos_ - start);
    return;
  }
  tok_.kind = Token::Sym;
  tok_.text = std::string(1, c);
  ++pos_;
  ++col_;
}

namespace {

// Joint integer normalization of a reduced fraction of rational-coefficient
// polynomials: returns integer-coefficient (P, Q) with positive primitive Q.
void integerNormalize(const RatFunc& f, MPoly& P, MPoly& Q) {
  mpz_class l(1);
  for (auto& [e, c] : f.num().terms()) l = lcm(l, c.get_den());
  for (auto& [e, c] : f.den().terms()) l = lcm(l, c.get_den());
  P = f.num().scaled(Rat(l));
  Q = f.den().scaled(Rat(l));
  mpz_class g(0);
  for (auto& [e, c] : P.terms()) g = gcd(g, c.get_num());
  for (auto& [e, c] : Q.terms()) g = gcd(g, c.get_num());
  if (g != 0 && g != 1) {
    P = P.scaled(Rat(1) / Rat(g));
    Q = Q.scaled(Rat(1) / Rat(g));
  }
  if (sgn(Q.leadCoeff()) < 0) {
    P = -P;
    Q = -Q;
  }
}

struct TermText {
  bool negative = false;
  std::string text;
};

TermText termToString(const RingSpec& ring, const TermKey& key, const RatFunc& coeff) {
  TermText out;
  std::ostringstream gens;
  bool hasGen = false;
  for (int g = 0; g < ring.genCount(); ++g) {
    int slot = ring.slotOfGen(g);
    if (ring.genParity(g) == Parity::Odd) {
      if (!(key.odd >> slot & 1)) continue;
      if (hasGen) gens << "*";
      gens << ring.gen(g).name;
    } else {
      if (key.exp[slot] == 0) continue;
      if (hasGen) gens << "*";
      gens << ring.gen(g).name;
      if (key.exp[slot] > 1) gens << "^" << key.exp[slot];
    }
    hasGen = true;
  }

  // A single-monomial coefficient over a constant denominator prints as a
  // rational times explicit variable powers; anything else as a fraction of
  // integer-coefficient polynomials.
  std::string cstr;
  bool coeffIsOne = false;
  std::string bodyMono;
  if (coeff.isPolynomial() && coeff.num().terms().size() == 1) {
    auto& [e, cf] = *coeff.num().terms().begin();
    Rat r = cf / coeff.den().constantValue();
    out.negative = sgn(r) < 0;
    Rat a = abs(r);
    if (a == 1)
      coeffIsOne = true;
    else if (a.get_den() == 1)
      cstr = a.get_num().get_str();
    else
      cstr = "(" + a.get_num().get_str() + "/" + a.get_den().get_str() + ")";
    std::ostringstream bm;
    bool first = true;
    for (int v = 0; v < static_cast<int>(e.size()); ++v) {
      if (e[v] == 0) continue;
      if (!first) bm << "*";
      bm << ring.bodyVars()[v];
      if (e[v] > 1) bm << "^" << e[v];
      first = false;
    }
    bodyMono = bm.str();
  } else {
    MPoly P, Q;
    integerNormalize(coeff, P, Q);
    std::string pstr = "(" + P.str(ring.bodyVars()) + ")";
    if (Q.isConstant() && Q.constantValue() == 1)
      cstr = pstr;
    else
      cstr = pstr + "/(" + Q.str(ring.bodyVars()) + ")";
  }

  std::string joined;
  for (const std::string& part : {cstr, bodyMono, gens.str()}) {
    if (part.empty()) continue;
    if (!joined.empty()) joined += "*";
    joined += part;
  }
  if (joined.empty()) joined = "1";
  if (coeffIsOne && joined == "1") joined = "1";  // bare unit
  out.text = joined;
  return out;
}

}  // namespace

std::string elementToString(const SuperElem& e) {
  if (e.isZero()) return "0";
  const RingSpec& ring = *e.ring();
  std::ostringstream out;
  bool first = true;
  for (auto& [key, coeff] : e.terms()) {
    TermText t = termToString(ring, key, coeff);
    if (first) {
      if (t.negative) out << "-";
    } else {
      out << (t.negative ? " - " : " + ");
    }
    out << t.text;
    first = false;
  }
  bool anyDen = false;
  for (int32_t p : e.denPow()) anyDen |= p > 0;
  if (!anyDen) return out.str();
  std::string core = out.str();
  if (e.terms().size() > 1) core = "(" + core + ")";
  for (int i = 0; i < ring.denCount(); ++i) {
    if (e.denPow()[i] <= 0) continue;
    core += " / " + ring.dens()[i].name + "^" + std::to_string(e.denPow()[i]);
  }
  return core;
}

namespace {

class ElemParser {
 public:
  ElemParser(Lexer& lex, RingPtr ring) : lex_(lex), ring_(std::move(ring)) {}

  SuperElem parseExpr() {
    bool neg = false;
    if (lex_.peek().kind == Token::Sym && (lex_.peek().text == "-" || lex_.peek().text == "+")) {
      neg = lex_.next().text == "-";
    }
    SuperElem acc = parseTerm();
    if (neg) acc = -acc;
    while (lex_.peek().kind == Token::Sym &&
           (lex_.peek().text == "+" || lex_.peek().text == "-")) {
      bool minus = lex_.next().text == "-";
      SuperElem t = parseTerm();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

 private:
  SuperElem parseTerm() {
    SuperElem acc = parseFactor();
    while (lex_.peek().kind == Token::Sym &&
           (lex_.peek().text == "*" || lex_.peek().text == "/")) {
      bool div = lex_.next().text == "/";
      SuperElem f = parseFactor();
      if (div) {
        try {
          acc = acc * f.invert();
        } catch (const std::exception& ex) {
          lex_.fail(std::string("division by a non-invertible factor: ") + ex.what());
        }
      } else {
        acc = acc * f;
      }
    }
    return acc;
  }

  SuperElem parseFactor() {
    Token t = lex_.peek();
    SuperElem base = SuperElem::zero(ring_);
    if (t.kind == Token::Int) {
      lex_.next();
      base = SuperElem::rational(ring_, Rat(mpz_class(t.text)));
    } else if (t.kind == Token::Name) {
      lex_.next();
      if (auto g = ring_->findGen(t.text)) {
        base = SuperElem::generator(ring_, *g);
      } else if (auto v = ring_->findBodyVar(t.text)) {
        base = SuperElem::bodyVar(ring_, *v);
      } else if (auto d = ring_->findDen(t.text)) {
        base = SuperElem::fromTerms(ring_, ring_->dens()[*d].terms);
      } else {
        throw ValidationError("undeclared name '" + t.text + "' (line " +
                              std::to_string(t.line) + ", col " + std::to_string(t.col) +
                              ")");
      }
    } else if (t.kind == Token::Sym && t.text == "(") {
      lex_.next();
      base = parseExpr();
      if (!(lex_.peek().kind == Token::Sym && lex_.peek().text == ")"))
        lex_.fail("expected ')'");
      lex_.next();
    } else {
      lex_.fail("expected a number, name or '('");
    }
    if (lex_.peek().kind == Token::Sym && lex_.peek().text == "^") {
      lex_.next();
      Token p = lex_.peek();
      if (p.kind != Token::Int) lex_.fail("expected an integer exponent");
      lex_.next();
      base = base.pow(static_cast<uint32_t>(std::stoul(p.text)));
    }
    return base;
  }

  Lexer& lex_;
  RingPtr ring_;
};

}  // namespace

SuperElem parseElement(const std::string& text, const RingPtr& ring) {
  Lexer lex(text);
  ElemParser p(lex, ring);
  SuperElem e = p.parseExpr();
  if (!lex.atEnd()) lex.fail("unexpected trailing input");
  return e;
}

SuperElem parseElementFromLexer(Lexer& lex, const RingPtr& ring) {
  ElemParser p(lex, ring);
  return p.parseExpr();
}

}  // namespace superpv
