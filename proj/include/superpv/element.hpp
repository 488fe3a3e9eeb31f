#pragma once

#include <optional>
#include <string>

#include "superpv/ring.hpp"

namespace superpv {

// Immutable value in a finitely generated supercommutative algebra, localized
// at the ring's distinguished denominators: terms / prod_i den_i^denPow_i.
// Canonical form: no zero coefficients, each odd generator at most once per
// monomial, denominator powers all zero when the element is zero. Equality
// compares canonical forms after clearing to a common denominator power.
class SuperElem {
 public:
  SuperElem() = default;

  static SuperElem zero(RingPtr ring);
  static SuperElem one(RingPtr ring);
  static SuperElem rational(RingPtr ring, const Rat& c);
  static SuperElem scalar(RingPtr ring, const RatFunc& c);
  static SuperElem generator(RingPtr ring, int genIdx);
  static SuperElem bodyVar(RingPtr ring, int varIdx);
  static SuperElem fromTerms(RingPtr ring, TermMap terms,
                             std::vector<int32_t> denPow = {});

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  // Denominator powers, padded to the ring's current denominator count
  // (elements created before a denominator was attached read as power 0).
  std::vector<int32_t> denPow() const;

  bool isZero() const { return terms_.empty(); }
  // Parity when homogeneous (zero counts as homogeneous of either parity);
  // nullopt when mixed.
  std::optional<Parity> parity() const;
  bool homogeneousOfParity(Parity p) const;

  SuperElem operator-() const;
  SuperElem operator+(const SuperElem& o) const;
  SuperElem operator-(const SuperElem& o) const;
  SuperElem operator*(const SuperElem& o) const;
  SuperElem scaled(const RatFunc& c) const;
  SuperElem scaledRat(const Rat& c) const;
  SuperElem pow(uint32_t k) const;

  bool operator==(const SuperElem& o) const;
  bool operator!=(const SuperElem& o) const { return !(*this == o); }

  // Kills every monomial with odd content; a ring morphism onto the purely
  // even part.
  SuperElem body() const;
  SuperElem evenPart() const;
  SuperElem oddPart() const;
  // Parity involution: negates the odd part.
  SuperElem sigma() const;
  SuperElem soul() const { return *this - body(); }

  // Exact inverse of an even element whose body is invertible in the
  // localized body ring. Throws NotEvenError / BodyNotInvertibleError.
  SuperElem invert() const;

  // Multiplies by prod den_i^k_i (k may be negative; negative powers are
  // cleared into the numerator).
  SuperElem withDenShift(const std::vector<int32_t>& k) const;
  // Cancels denominator powers that divide the numerator exactly.
  SuperElem reduceDenominators() const;

  std::string str() const;

 private:
  void normalize();
  RingPtr ring_;
  TermMap terms_;
  std::vector<int32_t> denPow_;
};

// Raw term-map product with Koszul signs; shared by SuperElem and the
// denominator plumbing.
TermMap termMapMul(const RingSpec& ring, const TermMap& a, const TermMap& b);

// Exact division by a body-only divisor; nullopt when not divisible.
std::optional<TermMap> termMapDividedBy(const TermMap& a, const TermMap& divisor);

// Ring morphism determined by matching names: body variables, generators and
// denominators of the source must all exist in the target with equal parity.
SuperElem liftElement(const SuperElem& a, const RingPtr& target);

// Algebra automorphism permuting generators (genPerm[i] = image index, parity
// preserved) and denominator slots. Koszul signs from reordering are applied.
SuperElem permuteGenerators(const SuperElem& a, const std::vector<int>& genPerm,
                            const std::vector<int>& denPerm);

void checkSameRing(const SuperElem& a, const SuperElem& b, const char* where);

// body() re-typed into a purely even target ring (normally the one from
// makeEvenSubring).
SuperElem substituteOddZero(const SuperElem& a, const RingPtr& evenTarget);

}  // namespace superpv
