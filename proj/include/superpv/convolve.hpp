#pragma once

#include "superpv/action.hpp"
#include "superpv/dword.hpp"
#include "superpv/element.hpp"

namespace superpv {

// Finitely supported functional on PBW monomials with values in a ring,
// homogeneous of a declared parity: |f(w)| = |f| + |w|.
class DFunctional {
 public:
  DFunctional(LiePtr lie, RingPtr ring, Parity parity);

  const LiePtr& lie() const { return lie_; }
  const RingPtr& ring() const { return ring_; }
  Parity parity() const { return parity_; }

  void set(const DWord::Mono& mono, SuperElem value);
  SuperElem value(const DWord::Mono& mono) const;  // zero off the support
  const std::map<DWord::Mono, SuperElem>& support() const { return vals_; }

  bool operator==(const DFunctional& o) const;

 private:
  LiePtr lie_;
  RingPtr ring_;
  Parity parity_;
  std::map<DWord::Mono, SuperElem> vals_;
};

// Super coproduct of a PBW monomial, components PBW-normalized:
// Delta(w) = prod (g ⊗ 1 + 1 ⊗ g) with the Koszul-signed tensor product.
std::map<std::pair<DWord::Mono, DWord::Mono>, Rat> superCoproduct(
    const LieSpec& lie, const DWord::Mono& mono);

// Convolution product f*g(d) = (-1)^{|f||d_(2)|} f(d_(1)) g(d_(2)), truncated
// to PBW monomials of length <= bound.
DFunctional convolve(const DFunctional& f, const DFunctional& g, int bound);

// The counit functional, the convolution unit: 1 on the empty word.
DFunctional counitFunctional(LiePtr lie, RingPtr ring);

// rho-style rank-one functional mu(a ⊗ a')(d) = (da)a' of the double-product
// map; used to exercise the convolution algebra against an independent
// structure.
DFunctional muFunctional(const DAction& action, const SuperElem& a,
                         const SuperElem& aPrime, int bound);

}  // namespace superpv
