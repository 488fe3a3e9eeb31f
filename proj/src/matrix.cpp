#include "superpv/matrix.hpp"

#include <sstream>

#include "superpv/errors.hpp"
#include "superpv/expr_io.hpp"

namespace superpv {

SuperMatrix::SuperMatrix(RingPtr ring, int m, int n) : ring_(std::move(ring)), m_(m), n_(n) {
  if (m_ < 0 || n_ < 0 || m_ + n_ < 1)
    throw ValidationError("SuperMatrix: format must have m+n >= 1");
  entries_.assign(static_cast<size_t>(dim()) * dim(), SuperElem::zero(ring_));
}

SuperMatrix SuperMatrix::identity(RingPtr ring, int m, int n) {
  SuperMatrix r(std::move(ring), m, n);
  for (int i = 0; i < r.dim(); ++i) r.at(i, i) = SuperElem::one(r.ring_);
  return r;
}

bool SuperMatrix::classifiesAs(MatClass c) const {
  if (c == MatClass::Mixed) return classify() == MatClass::Mixed;
  Parity p = c == MatClass::Even ? Parity::Even : Parity::Odd;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (!at(i, j).homogeneousOfParity(slotParity(i) + slotParity(j) + p)) return false;
  return true;
}

MatClass SuperMatrix::classify() const {
  if (classifiesAs(MatClass::Even)) return MatClass::Even;
  if (classifiesAs(MatClass::Odd)) return MatClass::Odd;
  return MatClass::Mixed;
}

bool SuperMatrix::isZero() const {
  for (auto& e : entries_)
    if (!e.isZero()) return false;
  return true;
}

bool SuperMatrix::operator==(const SuperMatrix& o) const {
  if (m_ != o.m_ || n_ != o.n_ || ring_ != o.ring_) return false;
  for (size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] != o.entries_[i]) return false;
  return true;
}

SuperMatrix SuperMatrix::operator-() const {
  SuperMatrix r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

SuperMatrix SuperMatrix::operator+(const SuperMatrix& o) const {
  SuperMatrix r = *this;
  for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
  return r;
}

SuperMatrix SuperMatrix::operator-(const SuperMatrix& o) const { return *this + (-o); }

SuperMatrix SuperMatrix::operator*(const SuperMatrix& o) const {
  if (m_ != o.m_ || n_ != o.n_)
    throw ValidationError("matrix product: format mismatch");
  SuperMatrix r(ring_, m_, n_);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      SuperElem s = SuperElem::zero(ring_);
      for (int k = 0; k < dim(); ++k) s = s + at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

SuperMatrix SuperMatrix::scaledLeft(const SuperElem& x) const {
  SuperMatrix r = *this;
  for (auto& e : r.entries_) e = x * e;
  return r;
}

SuperMatrix SuperMatrix::scaledRat(const Rat& c) const {
  SuperMatrix r = *this;
  for (auto& e : r.entries_) e = e.scaledRat(c);
  return r;
}

SuperMatrix SuperMatrix::sigma() const {
  SuperMatrix r = *this;
  for (auto& e : r.entries_) e = e.sigma();
  return r;
}

SuperMatrix SuperMatrix::body() const {
  SuperMatrix r = *this;
  for (auto& e : r.entries_) e = e.body();
  return r;
}

SuperElem detCommuting(const std::vector<std::vector<SuperElem>>& a, const RingPtr& ring) {
  size_t n = a.size();
  if (n == 0) return SuperElem::one(ring);
  if (n == 1) return a[0][0];
  SuperElem det = SuperElem::zero(ring);
  for (size_t k = 0; k < n; ++k) {
    if (a[0][k].isZero()) continue;
    std::vector<std::vector<SuperElem>> minor(n - 1);
    for (size_t i = 1; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (j != k) minor[i - 1].push_back(a[i][j]);
    SuperElem term = a[0][k] * detCommuting(minor, ring);
    det = (k % 2 == 0) ? det + term : det - term;
  }
  return det;
}

namespace {

std::vector<std::vector<SuperElem>> blockOf(const SuperMatrix& x, int r0, int c0, int sz) {
  std::vector<std::vector<SuperElem>> b(sz);
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j) b[i].push_back(x.at(r0 + i, c0 + j));
  return b;
}

// Adjugate of a commuting block: transposed cofactors.
std::vector<std::vector<SuperElem>> adjugate(const std::vector<std::vector<SuperElem>>& a,
                                             const RingPtr& ring) {
  size_t n = a.size();
  std::vector<std::vector<SuperElem>> adj(n, std::vector<SuperElem>(n, SuperElem::zero(ring)));
  if (n == 1) {
    adj[0][0] = SuperElem::one(ring);
    return adj;
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      std::vector<std::vector<SuperElem>> minor;
      for (size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<SuperElem> row;
        for (size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(a[r][c]);
        minor.push_back(std::move(row));
      }
      SuperElem cof = detCommuting(minor, ring);
      if ((i + j) % 2 == 1) cof = -cof;
      adj[j][i] = cof;
    }
  return adj;
}

}  // namespace

SuperElem SuperMatrix::det0() const {
  if (!classifiesAs(MatClass::Even))
    throw NotEvenMatrixError("det0: matrix is not even");
  SuperElem upper = detCommuting(blockOf(*this, 0, 0, m_), ring_);
  SuperElem lower = detCommuting(blockOf(*this, m_, m_, n_), ring_);
  return upper * lower;
}

bool hasInvertibleBody(const SuperElem& x) {
  try {
    x.body().invert();
    return true;
  } catch (const BodyNotInvertibleError&) {
    return false;
  }
}

SuperMatrix SuperMatrix::invertEven() const {
  if (!classifiesAs(MatClass::Even))
    throw NotEvenMatrixError("invert_even: matrix is not even");
  SuperMatrix bodyInv(ring_, m_, n_);
  try {
    for (int blk = 0; blk < 2; ++blk) {
      int off = blk == 0 ? 0 : m_;
      int sz = blk == 0 ? m_ : n_;
      if (sz == 0) continue;
      auto block = blockOf(body(), off, off, sz);
      SuperElem det = detCommuting(block, ring_);
      SuperElem detInv = det.invert();
      auto adj = adjugate(block, ring_);
      for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j) bodyInv.at(off + i, off + j) = adj[i][j] * detInv;
    }
  } catch (const BodyNotInvertibleError& e) {
    throw SingularBodyError(std::string("invert_even: singular body (") + e.what() + ")");
  }
  // X = B + S with S nil; X^{-1} = sum_j (-B^{-1}S)^j B^{-1}.
  SuperMatrix soul = *this - body();
  SuperMatrix result = bodyInv;
  if (!soul.isZero()) {
    SuperMatrix factor = -(bodyInv * soul);
    SuperMatrix cur = factor;
    while (!cur.isZero()) {
      result = result + cur * bodyInv;
      cur = cur * factor;
    }
  }
  return result;
}

bool SuperMatrix::isGl() const {
  if (!classifiesAs(MatClass::Even)) return false;
  return hasInvertibleBody(det0());
}

std::string SuperMatrix::str() const {
  std::ostringstream out;
  out << m_ << "|" << n_ << " [";
  for (int i = 0; i < dim(); ++i) {
    if (i) out << ", ";
    out << "[";
    for (int j = 0; j < dim(); ++j) {
      if (j) out << ", ";
      out << at(i, j).str();
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

SuperMatrix parseMatrix(const std::string& text, const RingPtr& ring) {
  Lexer lex(text);
  auto expectSym = [&](const char* s) {
    if (!(lex.peek().kind == Token::Sym && lex.peek().text == s))
      lex.fail(std::string("expected '") + s + "'");
    lex.next();
  };
  if (lex.peek().kind != Token::Int) lex.fail("expected format tag m|n");
  int m = std::stoi(lex.next().text);
  expectSym("|");
  if (lex.peek().kind != Token::Int) lex.fail("expected format tag m|n");
  int n = std::stoi(lex.next().text);
  SuperMatrix x(ring, m, n);
  expectSym("[");
  for (int i = 0; i < x.dim(); ++i) {
    if (i) expectSym(",");
    expectSym("[");
    for (int j = 0; j < x.dim(); ++j) {
      if (j) expectSym(",");
      // Entry expressions end at ',' or ']' at depth 0; hand the lexer to the
      // element parser via a sub-grammar: collect tokens is avoided by
      // parsing directly with a shared parser entry point.
      x.at(i, j) = parseElementFromLexer(lex, ring);
    }
    expectSym("]");
  }
  expectSym("]");
  if (!lex.atEnd()) lex.fail("unexpected trailing input");
  return x;
}

}  // namespace superpv
