#pragma once

#include <random>

#include "superpv/dword.hpp"
#include "superpv/element.hpp"
#include "superpv/report.hpp"

namespace superpv {

// Superderivation action of the Lie generators on a ring: a table of values
// on body variables and ring generators, extended to the whole ring by the
// super-Leibniz rule, the chain rule on body scalars, and the quotient rule
// on distinguished denominators. Words of U(g) act by composition.
class DAction {
 public:
  DAction(LiePtr lie, RingPtr ring);

  const LiePtr& lie() const { return lie_; }
  const RingPtr& ring() const { return ring_; }

  // d . (body variable); value must be homogeneous of parity |d|.
  void setOnBodyVar(int lieGen, int var, SuperElem value);
  // d . (ring generator); value must be homogeneous of parity |d|+|x|.
  void setOnGen(int lieGen, int ringGen, SuperElem value);

  const SuperElem& onBodyVar(int lieGen, int var) const;
  const SuperElem& onGen(int lieGen, int ringGen) const;

  SuperElem applyGenerator(int lieGen, const SuperElem& a) const;
  // (d1 d2 ... ds) a = d1(d2(...(ds a))).
  SuperElem applySequence(const DWord::Mono& seq, SuperElem a) const;
  SuperElem applyWord(const DWord& w, const SuperElem& a) const;

 private:
  LiePtr lie_;
  RingPtr ring_;
  std::vector<std::vector<SuperElem>> onVar_;  // [lieGen][bodyVar]
  std::vector<std::vector<SuperElem>> onGen_;  // [lieGen][ringGen]
};

// d(ab) = (da)b + (-1)^{|d||a|} a(db) on random homogeneous pairs, exactly.
CheckReport checkSuperLeibniz(const DAction& action, int samples, uint64_t seed);

// [d,d']x = d(d'x) - (-1)^{|d||d'|} d'(dx) on every generator pair and every
// ring generator and body variable.
CheckReport checkBracketCompat(const DAction& action, const LieSpec& spec);

// Basis of { sum c_i a_i : c_i rational, d(sum c_i a_i) = 0 for all d }.
std::vector<SuperElem> constants(const DAction& action,
                                 const std::vector<SuperElem>& span);

// Rational kernel of the span: basis of { c : sum c_i a_i = 0 }. Empty means
// the listed elements are linearly independent over the rationals.
std::vector<std::vector<Rat>> kernelOfElements(const std::vector<SuperElem>& span);

}  // namespace superpv
