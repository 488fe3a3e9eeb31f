#pragma once

#include "superpv/dmodule.hpp"

namespace superpv {

// Symbolic coordinate ring of the module's solution grid: the base ring
// extended by an (m+n)x(m+n) generator grid with the even block pattern,
// localized at det0 of the grid, with the induced diagonal action
// d t_ij = sum_k F(d)_{ik} t_kj.
struct PVRing {
  RingPtr ring;
  std::shared_ptr<DAction> action;
  int m = 0, n = 0;
  std::vector<std::vector<int>> gridGen;  // generator index of t_ij
  int denSlot = -1;                       // det0 slot

  SuperMatrix gridMatrix() const;
  SuperElem gridEntry(int i, int j) const {
    return SuperElem::generator(ring, gridGen[i][j]);
  }
};

PVRing buildPvRing(const DModule& mod, const DAction& baseAction,
                   const std::string& gridPrefix = "t",
                   const std::string& denName = "det0", bool verify = true);

struct GlPrimitiveResult {
  bool primitive = false;
  std::vector<SuperMatrix> F;  // over the subring when primitive
  std::string offendingEntry;  // first entry outside the subring otherwise
  std::string offendingGen;
};

// Computes F(d) = (dX) X^{-1} per generator, decides syntactic membership of
// every entry in the declared subring, and checks the block classification.
// Throws NotEvenMatrixError / SingularBodyError when X is not invertible.
GlPrimitiveResult glPrimitiveCheck(const SuperMatrix& X, const DAction& action,
                                   const RingPtr& subring);

}  // namespace superpv
