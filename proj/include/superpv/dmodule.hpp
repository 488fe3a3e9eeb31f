#pragma once

#include "superpv/action.hpp"
#include "superpv/matrix.hpp"

namespace superpv {

// Free rank-m|n module structure: one matrix F(d) per Lie generator with
// dv = F(d)v. The classification of F(d) must equal the parity of d; that
// constraint is forced by the action preserving the module grading and is
// enforced at construction.
class DModule {
 public:
  DModule(LiePtr lie, RingPtr ring, int m, int n, std::vector<SuperMatrix> F);

  const LiePtr& lie() const { return lie_; }
  const RingPtr& ring() const { return ring_; }
  int m() const { return m_; }
  int n() const { return n_; }
  const SuperMatrix& F(int gen) const { return F_[gen]; }
  const std::vector<SuperMatrix>& table() const { return F_; }

 private:
  LiePtr lie_;
  RingPtr ring_;
  int m_, n_;
  std::vector<SuperMatrix> F_;
};

// Entry-wise generator action on a matrix.
SuperMatrix matrixApplyGen(const DAction& action, int lieGen, const SuperMatrix& x);

// Structure map on a free word of generators through the twisted cocycle
// F(d w) = d(F(w)) + sigma^{|d|}(F(w)) F(d), with F(empty) = I.
SuperMatrix evalStructureSeq(const DModule& mod, const DAction& action,
                             const DWord::Mono& seq);

// Linear extension to elements of U(g); verifies consistency first when
// `verify` is set and throws InconsistentModuleError on failure.
SuperMatrix extendStructureMap(const DModule& mod, const DWord& word,
                               const DAction& action, bool verify = true);

// For every bracket relation, the structure map evaluated on both sides of
// d_i d_j = (-1)^{|d_i||d_j|} d_j d_i + [d_i, d_j] must agree.
CheckReport checkModuleConsistency(const DModule& mod, const DAction& action);

}  // namespace superpv
