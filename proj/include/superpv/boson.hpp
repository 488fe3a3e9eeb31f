#pragma once

#include "superpv/dword.hpp"
#include "superpv/report.hpp"

namespace superpv {

// Element of the bosonization D^b = U(g) x Z/2: rational combination of
// (PBW monomial, sigma-exponent) pairs, sigma kept to the right of the word.
// Moving sigma past a generator d costs (-1)^{|d|}; sigma^2 = 1.
class BosonElem {
 public:
  struct BKey {
    DWord::Mono word;
    uint8_t sig = 0;
    bool operator<(const BKey& o) const {
      if (word != o.word) return word < o.word;
      return sig < o.sig;
    }
    bool operator==(const BKey& o) const { return word == o.word && sig == o.sig; }
  };

  BosonElem() = default;
  static BosonElem zero(LiePtr lie);
  static BosonElem one(LiePtr lie);
  static BosonElem sigma(LiePtr lie);
  static BosonElem generator(LiePtr lie, int g);
  static BosonElem fromWord(LiePtr lie, const DWord::Mono& seq, uint8_t sig = 0,
                            const Rat& c = Rat(1));
  static BosonElem fromDWord(const DWord& w);

  const LiePtr& lie() const { return lie_; }
  const std::map<BKey, Rat>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  BosonElem operator-() const;
  BosonElem operator+(const BosonElem& o) const;
  BosonElem operator-(const BosonElem& o) const;
  BosonElem operator*(const BosonElem& o) const;
  BosonElem scaled(const Rat& c) const;

  bool operator==(const BosonElem& o) const {
    return lie_ == o.lie_ && terms_ == o.terms_;
  }
  bool operator!=(const BosonElem& o) const { return !(*this == o); }

  Rat counit() const;
  std::string str() const;

 private:
  LiePtr lie_;
  std::map<BKey, Rat> terms_;
  void addTerm(const BKey& k, const Rat& c);
};

// Formal sum of simple tensors over D^b ⊗ D^b with canonical term ordering.
using BosonTensor = std::map<std::pair<BosonElem::BKey, BosonElem::BKey>, Rat>;

// Coproduct of D^b: grouplike sigma, Delta^b(d) = d ⊗ 1 + sigma^{|d|} ⊗ d on
// primitives, extended multiplicatively (ordinary tensor algebra).
BosonTensor deltaB(const BosonElem& x);

// Antipode S^b(d) = sigma^{|d|} S(d) and its inverse S^b^{-1}(d) =
// S(d) sigma^{|d|}, extended anti-multiplicatively from S(d) = -d.
BosonElem sB(const BosonElem& x);
BosonElem sBinv(const BosonElem& x);

std::string tensorStr(const LieSpec& lie, const BosonTensor& t);

// d_[2] S^b^{-1}(d_[1]) = eps(d) 1 = d_[1] S^b(d_[2]) on all PBW words of
// length <= bound.
CheckReport checkAntipodeIdentities(const LiePtr& lie, int bound);
// (Delta^b ⊗ id)Delta^b = (id ⊗ Delta^b)Delta^b on all words of length <= bound.
CheckReport checkCoassociativity(const LiePtr& lie, int bound);
// S^b(xy) = S^b(y)S^b(x) and S^b^{-1}(S^b(x)) = x on words of length <= bound.
CheckReport checkAntipodeAlgebra(const LiePtr& lie, int bound);

}  // namespace superpv
