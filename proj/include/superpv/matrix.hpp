#pragma once

#include <string>
#include <vector>

#include "superpv/element.hpp"

namespace superpv {

enum class MatClass { Even, Odd, Mixed };

inline const char* to_string(MatClass c) {
  switch (c) {
    case MatClass::Even: return "even";
    case MatClass::Odd: return "odd";
    default: return "mixed";
  }
}

// (m+n) x (m+n) block-format matrix over one supercommutative ring. Row and
// column slots carry parities (first m even, last n odd); an even matrix has
// even diagonal blocks and odd off-diagonal blocks, an odd matrix the
// reverse.
class SuperMatrix {
 public:
  SuperMatrix() = default;
  SuperMatrix(RingPtr ring, int m, int n);
  static SuperMatrix identity(RingPtr ring, int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  int dim() const { return m_ + n_; }
  const RingPtr& ring() const { return ring_; }

  SuperElem& at(int i, int j) { return entries_[i * dim() + j]; }
  const SuperElem& at(int i, int j) const { return entries_[i * dim() + j]; }

  Parity slotParity(int i) const { return i < m_ ? Parity::Even : Parity::Odd; }

  MatClass classify() const;
  // Zero-tolerant pattern test: every entry homogeneous of the parity the
  // pattern prescribes (zero entries match anything).
  bool classifiesAs(MatClass c) const;

  bool isZero() const;
  bool operator==(const SuperMatrix& o) const;
  bool operator!=(const SuperMatrix& o) const { return !(*this == o); }

  SuperMatrix operator-() const;
  SuperMatrix operator+(const SuperMatrix& o) const;
  SuperMatrix operator-(const SuperMatrix& o) const;
  SuperMatrix operator*(const SuperMatrix& o) const;
  SuperMatrix scaledLeft(const SuperElem& x) const;
  SuperMatrix scaledRat(const Rat& c) const;

  // Entry-wise parity twist (negates odd entries).
  SuperMatrix sigma() const;
  SuperMatrix body() const;

  // Product of the ordinary determinants of the two diagonal blocks; requires
  // an even matrix (throws NotEvenMatrixError).
  SuperElem det0() const;

  // Exact inverse of an even matrix with invertible body: block-wise
  // adjugate/determinant inverse of the body, then a finite Neumann
  // correction by the nilpotent remainder. Throws NotEvenMatrixError /
  // SingularBodyError.
  SuperMatrix invertEven() const;

  // True exactly when invertEven succeeds: even with invertible det0 body.
  bool isGl() const;

  std::string str() const;

 private:
  RingPtr ring_;
  int m_ = 0, n_ = 0;
  std::vector<SuperElem> entries_;
};

SuperMatrix parseMatrix(const std::string& text, const RingPtr& ring);

// Ordinary determinant of a square grid of pairwise commuting (even)
// elements, by division-free cofactor expansion.
SuperElem detCommuting(const std::vector<std::vector<SuperElem>>& a, const RingPtr& ring);

// True when the body of x is invertible in the localized body ring.
bool hasInvertibleBody(const SuperElem& x);

}  // namespace superpv
