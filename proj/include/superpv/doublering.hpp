#pragma once

#include "superpv/dmodule.hpp"
#include "superpv/report.hpp"

namespace superpv {

// Concrete realization of the iterated tensor square of the PV ring over the
// base: one GL-generator grid per tensor factor, each with its det0 inverse,
// under the diagonal action. Grids supercommute over the base by
// construction.
struct GridRing {
  RingPtr ring;
  std::shared_ptr<DAction> action;
  int m = 0, n = 0;
  int copies = 0;
  std::vector<std::vector<std::vector<int>>> grid;  // [copy][i][j]
  std::vector<int> denSlot;                         // per copy

  SuperMatrix gridMatrix(int copy) const;
};

GridRing buildGridRing(const DModule& mod, const DAction& baseAction, int copies,
                       bool verify = true);

// Z = (Y ⊗ 1)(1 ⊗ X) and W = (1 ⊗ Y)(X ⊗ 1) over grids p (inverted) and q.
SuperMatrix zMatrixOf(const GridRing& dr, int p, int q);
SuperMatrix wMatrixOf(const GridRing& dr, int p, int q);

struct ZWPair {
  SuperMatrix Z, W;
};
ZWPair zwMatrices(const GridRing& dr);

// The tensor-flip automorphism exchanging the two grids of a 2-copy ring,
// applied entry-wise.
SuperMatrix gridSwap(const GridRing& dr, const SuperMatrix& x);

struct ZWReport {
  CheckReport invariance;   // dZ = dW = 0 for every generator
  CheckReport inverses;     // ZW = WZ = I
  CheckReport antipode;     // flip swaps Z and W
  CheckReport comatrix;     // Z13 = Z12 Z23 in the triple ring
  CheckReport coaction;     // 1 ⊗ X = (X ⊗ 1) Z
  bool pass() const {
    return invariance.pass && inverses.pass && antipode.pass && comatrix.pass &&
           coaction.pass;
  }
};

// Z/W invariance and mutual-inverse checks in the double ring.
ZWReport zwCheck(const DModule& mod, const DAction& baseAction);
// The comatrix coproduct, coaction and antipode identities (triple ring).
ZWReport hopfDataCheck(const DModule& mod, const DAction& baseAction);

}  // namespace superpv
