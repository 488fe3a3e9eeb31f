#pragma once

#include <map>
#include <string>
#include <vector>

#include "superpv/lie.hpp"

namespace superpv {

// Element of the universal envelope U(g) as a rational linear combination of
// PBW-normal monomials: nondecreasing generator sequences in declaration
// order, odd generators with exponent at most one. Products rewrite to normal
// form through the bracket table.
class DWord {
 public:
  using Mono = std::vector<int>;

  DWord() = default;
  static DWord zero(LiePtr lie);
  static DWord one(LiePtr lie);
  static DWord generator(LiePtr lie, int g);
  static DWord fromSequence(LiePtr lie, const Mono& seq, const Rat& c = Rat(1));

  const LiePtr& lie() const { return lie_; }
  const std::map<Mono, Rat>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  DWord operator-() const;
  DWord operator+(const DWord& o) const;
  DWord operator-(const DWord& o) const;
  DWord operator*(const DWord& o) const;
  DWord scaled(const Rat& c) const;

  bool operator==(const DWord& o) const {
    return lie_ == o.lie_ && terms_ == o.terms_;
  }
  bool operator!=(const DWord& o) const { return !(*this == o); }

  // Counit: coefficient of the empty word.
  Rat counit() const;
  std::optional<Parity> parity() const;

  std::string str() const;

  static Parity monoParity(const LieSpec& lie, const Mono& m);
  static bool isNormal(const LieSpec& lie, const Mono& m);
  // PBW normal form of a free generator sequence, as a raw term map.
  static std::map<Mono, Rat> normalizedTerms(const LieSpec& lie, const Mono& seq,
                                             const Rat& c = Rat(1));

 private:
  LiePtr lie_;
  std::map<Mono, Rat> terms_;
  void addTerm(const Mono& m, const Rat& c);
};

// All PBW-normal monomials of length <= maxLen, ordered by length then
// lexicographically (the empty word first).
std::vector<DWord::Mono> enumeratePbwMonos(const LieSpec& lie, int maxLen);

}  // namespace superpv
