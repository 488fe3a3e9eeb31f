#pragma once

#include "superpv/dmodule.hpp"

namespace superpv {

// The classical system attached to a module: odd base elements killed, odd
// generators dropped. Structure matrices live over the purely even subring
// under the even sub-Lie-algebra.
struct EvenReduction {
  LiePtr evenLie;
  RingPtr evenRing;
  std::shared_ptr<DAction> action;
  std::vector<SuperMatrix> matrices;   // one per even generator
  std::vector<int> baseGenOfEven;      // even Lie index -> base Lie index
};

EvenReduction evenReduction(const DModule& mod, const DAction& baseAction);

// The reduced system as a DModule over the even data (for reuse of the
// structure-map machinery).
DModule reductionModule(const EvenReduction& red, int m, int n);

}  // namespace superpv
