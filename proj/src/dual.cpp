#include "superpv/dual.hpp"

#include "superpv/errors.hpp"

namespace superpv {

namespace {

Parity slotParity(const DModule& mod, int i) {
  return i < mod.m() ? Parity::Even : Parity::Odd;
}

// (-1)^{p |x|} x for possibly non-homogeneous x.
SuperElem twistIf(const SuperElem& x, bool apply) { return apply ? x.sigma() : x; }

}  // namespace

bool functionalHomogeneous(const DModule& mod, const ModFunctional& f) {
  for (int i = 0; i < mod.m() + mod.n(); ++i)
    if (!f.vals[i].homogeneousOfParity(f.parity + slotParity(mod, i))) return false;
  return true;
}

ModFunctional functionalApplyGen(const DModule& mod, const DAction& action, Side side,
                                 int lieGen, const ModFunctional& f) {
  int dim = mod.m() + mod.n();
  bool dOdd = mod.lie()->parity(lieGen) == Parity::Odd;
  bool fOdd = f.parity == Parity::Odd;
  ModFunctional out;
  out.parity = f.parity + mod.lie()->parity(lieGen);
  out.vals.assign(dim, SuperElem::zero(mod.ring()));
  const SuperMatrix& F = mod.F(lieGen);
  for (int i = 0; i < dim; ++i) {
    // f(d v_i) with the side's linearity transport.
    SuperElem fdv = SuperElem::zero(mod.ring());
    for (int k = 0; k < dim; ++k) {
      if (F.at(i, k).isZero() || f.vals[k].isZero()) continue;
      if (side == Side::Left) {
        // f(x v_k) = (-1)^{|f||x|} x f(v_k)
        fdv = fdv + twistIf(F.at(i, k), fOdd) * f.vals[k];
      } else {
        // f(x v_k) = (-1)^{|x||v_k|} f(v_k) x
        bool vkOdd = slotParity(mod, k) == Parity::Odd;
        fdv = fdv + f.vals[k] * twistIf(F.at(i, k), vkOdd);
      }
    }
    SuperElem dfv = action.applyGenerator(lieGen, f.vals[i]);
    if (side == Side::Left) {
      // (df)(v) = (-1)^{|d||v|} ( d(f(v)) - f(dv) )
      SuperElem v = dfv - fdv;
      bool viOdd = slotParity(mod, i) == Parity::Odd;
      out.vals[i] = (dOdd && viOdd) ? -v : v;
    } else {
      // (df)(v) = d(f(v)) - (-1)^{|d||f|} f(dv)
      out.vals[i] = (dOdd && fOdd) ? dfv + fdv : dfv - fdv;
    }
  }
  return out;
}

DModule dualStructure(const DModule& mod, const DAction& action, Side side, bool verify) {
  if (verify) {
    CheckReport r = checkModuleConsistency(mod, action);
    if (!r.pass) throw InconsistentModuleError(r.detail);
  }
  int dim = mod.m() + mod.n();
  std::vector<SuperMatrix> G;
  for (int d = 0; d < mod.lie()->genCount(); ++d) {
    SuperMatrix Gd(mod.ring(), mod.m(), mod.n());
    for (int j = 0; j < dim; ++j) {
      ModFunctional fj;
      fj.parity = slotParity(mod, j);
      fj.vals.assign(dim, SuperElem::zero(mod.ring()));
      fj.vals[j] = SuperElem::one(mod.ring());
      ModFunctional dfj = functionalApplyGen(mod, action, side, d, fj);
      for (int k = 0; k < dim; ++k) {
        // Expansion in the dual basis: the left module structure on the dual
        // carries (x f_k)(v_k) = (-1)^{|x||v_k|} x, the right one none.
        bool vkOdd = slotParity(mod, k) == Parity::Odd;
        Gd.at(j, k) = side == Side::Left ? twistIf(dfj.vals[k], vkOdd) : dfj.vals[k];
      }
    }
    G.push_back(std::move(Gd));
  }
  return DModule(mod.lie(), mod.ring(), mod.m(), mod.n(), std::move(G));
}

ModFunctional parityFlip(const DModule& mod, const ModFunctional& f) {
  if (!functionalHomogeneous(mod, f))
    throw ValidationError("parity_flip: functional is not homogeneous");
  ModFunctional out = f;
  if (f.parity == Parity::Odd)
    for (int i = 0; i < mod.m() + mod.n(); ++i)
      if (slotParity(mod, i) == Parity::Odd) out.vals[i] = -out.vals[i];
  return out;
}

SuperElem evalPairing(const DModule& mod, Side side, const ModFunctional& f,
                      const std::vector<SuperElem>& coords) {
  SuperElem acc = SuperElem::zero(mod.ring());
  bool fOdd = f.parity == Parity::Odd;
  for (int i = 0; i < mod.m() + mod.n(); ++i) {
    if (coords[i].isZero() || f.vals[i].isZero()) continue;
    if (side == Side::Left) {
      acc = acc + twistIf(coords[i], fOdd) * f.vals[i];
    } else {
      bool viOdd = slotParity(mod, i) == Parity::Odd;
      acc = acc + f.vals[i] * twistIf(coords[i], viOdd);
    }
  }
  return acc;
}

}  // namespace superpv
