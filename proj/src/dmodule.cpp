#include "superpv/dmodule.hpp"

#include "superpv/errors.hpp"

namespace superpv {

DModule::DModule(LiePtr lie, RingPtr ring, int m, int n, std::vector<SuperMatrix> F)
    : lie_(std::move(lie)), ring_(std::move(ring)), m_(m), n_(n), F_(std::move(F)) {
  if (static_cast<int>(F_.size()) != lie_->genCount())
    throw ValidationError("DModule: one structure matrix per Lie generator required");
  for (int g = 0; g < lie_->genCount(); ++g) {
    if (F_[g].m() != m_ || F_[g].n() != n_)
      throw ValidationError("DModule: F(" + lie_->gen(g).name + ") has wrong format");
    if (F_[g].ring() != ring_)
      throw RingMismatchError("DModule: structure matrix in wrong ring");
    MatClass want = lie_->parity(g) == Parity::Odd ? MatClass::Odd : MatClass::Even;
    if (!F_[g].classifiesAs(want))
      throw ValidationError("DModule: F(" + lie_->gen(g).name +
                            ") must classify as " + to_string(want));
  }
}

SuperMatrix matrixApplyGen(const DAction& action, int lieGen, const SuperMatrix& x) {
  SuperMatrix r = x;
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j) r.at(i, j) = action.applyGenerator(lieGen, x.at(i, j));
  return r;
}

SuperMatrix evalStructureSeq(const DModule& mod, const DAction& action,
                             const DWord::Mono& seq) {
  if (seq.empty()) return SuperMatrix::identity(mod.ring(), mod.m(), mod.n());
  DWord::Mono rest(seq.begin() + 1, seq.end());
  SuperMatrix tail = evalStructureSeq(mod, action, rest);
  int d = seq.front();
  SuperMatrix acted = matrixApplyGen(action, d, tail);
  SuperMatrix twisted =
      mod.lie()->parity(d) == Parity::Odd ? tail.sigma() : tail;
  return acted + twisted * mod.F(d);
}

SuperMatrix extendStructureMap(const DModule& mod, const DWord& word,
                               const DAction& action, bool verify) {
  if (verify) {
    CheckReport r = checkModuleConsistency(mod, action);
    if (!r.pass) throw InconsistentModuleError(r.detail);
  }
  SuperMatrix acc(mod.ring(), mod.m(), mod.n());
  for (auto& [mono, c] : word.terms())
    acc = acc + evalStructureSeq(mod, action, mono).scaledRat(c);
  return acc;
}

CheckReport checkModuleConsistency(const DModule& mod, const DAction& action) {
  const LieSpec& lie = *mod.lie();
  for (int i = 0; i < lie.genCount(); ++i) {
    for (int j = 0; j <= i; ++j) {
      bool oddPair = lie.parity(i) == Parity::Odd && lie.parity(j) == Parity::Odd;
      if (i == j && lie.parity(i) == Parity::Even) continue;  // relation is vacuous
      SuperMatrix lhs = evalStructureSeq(mod, action, {i, j});
      SuperMatrix rhs(mod.ring(), mod.m(), mod.n());
      if (i != j) {
        rhs = evalStructureSeq(mod, action, {j, i});
        if (oddPair) rhs = -rhs;
      }
      for (auto& [g, c] : lie.bracket(i, j)) rhs = rhs + mod.F(g).scaledRat(c);
      if (i == j) {
        // d d = (1/2)[d,d] for odd d.
        lhs = lhs.scaledRat(Rat(2));
      }
      if (lhs != rhs)
        return CheckReport::failed("structure map violates the relation for [" +
                                   lie.gen(i).name + "," + lie.gen(j).name + "]");
    }
  }
  return CheckReport::ok();
}

}  // namespace superpv
