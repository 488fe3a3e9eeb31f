#include "superpv/pvring.hpp"

#include "superpv/errors.hpp"

namespace superpv {

SuperMatrix PVRing::gridMatrix() const {
  SuperMatrix T(ring, m, n);
  for (int i = 0; i < T.dim(); ++i)
    for (int j = 0; j < T.dim(); ++j) T.at(i, j) = gridEntry(i, j);
  return T;
}

namespace {

Parity gridParity(int i, int j, int m) {
  Parity pi = i < m ? Parity::Even : Parity::Odd;
  Parity pj = j < m ? Parity::Even : Parity::Odd;
  return pi + pj;
}

}  // namespace

PVRing buildPvRing(const DModule& mod, const DAction& baseAction,
                   const std::string& gridPrefix, const std::string& denName,
                   bool verify) {
  if (mod.ring() != baseAction.ring() || mod.lie() != baseAction.lie())
    throw RingMismatchError("buildPvRing: module and action disagree");
  if (verify) {
    CheckReport r = checkModuleConsistency(mod, baseAction);
    if (!r.pass) throw InconsistentModuleError(r.detail);
  }
  const RingSpec& base = *mod.ring();
  int dim = mod.m() + mod.n();

  std::vector<RingGen> gens = base.gens();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      gens.push_back({gridPrefix + std::to_string(i + 1) + std::to_string(j + 1),
                      gridParity(i, j, mod.m())});
  auto ring = std::make_shared<RingSpec>(base.bodyVars(), std::move(gens));

  PVRing pv;
  pv.m = mod.m();
  pv.n = mod.n();
  pv.gridGen.assign(dim, std::vector<int>(dim, -1));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      pv.gridGen[i][j] = *ring->findGen(gridPrefix + std::to_string(i + 1) +
                                        std::to_string(j + 1));

  // Base denominators carry over, then det0 of the grid.
  for (auto& den : base.dens()) {
    SuperElem lifted =
        liftElement(SuperElem::fromTerms(mod.ring(), den.terms), ring);
    ring->addDenominator(den.name, lifted.terms());
  }
  {
    RingPtr view = ring;
    std::vector<std::vector<SuperElem>> upper(pv.m), lower(pv.n);
    for (int i = 0; i < pv.m; ++i)
      for (int j = 0; j < pv.m; ++j)
        upper[i].push_back(SuperElem::generator(view, pv.gridGen[i][j]));
    for (int i = 0; i < pv.n; ++i)
      for (int j = 0; j < pv.n; ++j)
        lower[i].push_back(SuperElem::generator(view, pv.gridGen[pv.m + i][pv.m + j]));
    SuperElem det0 = detCommuting(upper, view) * detCommuting(lower, view);
    ring->addDenominator(denName, det0.terms());
  }
  pv.denSlot = *ring->findDen(denName);
  pv.ring = ring;

  pv.action = std::make_shared<DAction>(mod.lie(), pv.ring);
  for (int d = 0; d < mod.lie()->genCount(); ++d) {
    for (int v = 0; v < base.bodyVarCount(); ++v)
      pv.action->setOnBodyVar(d, v, liftElement(baseAction.onBodyVar(d, v), pv.ring));
    for (int g = 0; g < base.genCount(); ++g)
      pv.action->setOnGen(d, *pv.ring->findGen(base.gen(g).name),
                          liftElement(baseAction.onGen(d, g), pv.ring));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        SuperElem v = SuperElem::zero(pv.ring);
        for (int k = 0; k < dim; ++k) {
          const SuperElem& fik = mod.F(d).at(i, k);
          if (fik.isZero()) continue;
          v = v + liftElement(fik, pv.ring) * pv.gridEntry(k, j);
        }
        pv.action->setOnGen(d, pv.gridGen[i][j], v);
      }
  }
  return pv;
}

namespace {

bool entryInSubring(const SuperElem& e, const RingPtr& subring) {
  try {
    liftElement(e, subring);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

}  // namespace

GlPrimitiveResult glPrimitiveCheck(const SuperMatrix& X, const DAction& action,
                                   const RingPtr& subring) {
  SuperMatrix Y = X.invertEven();  // throws when X is not invertible
  GlPrimitiveResult out;
  const LieSpec& lie = *action.lie();
  for (int d = 0; d < lie.genCount(); ++d) {
    SuperMatrix Fd = matrixApplyGen(action, d, X) * Y;
    MatClass want = lie.parity(d) == Parity::Odd ? MatClass::Odd : MatClass::Even;
    if (!Fd.classifiesAs(want)) {
      out.primitive = false;
      out.offendingGen = lie.gen(d).name;
      out.offendingEntry = "classification of F(" + lie.gen(d).name + ") is not " +
                           std::string(to_string(want));
      return out;
    }
    SuperMatrix over(subring, X.m(), X.n());
    for (int i = 0; i < X.dim(); ++i)
      for (int j = 0; j < X.dim(); ++j) {
        SuperElem e = Fd.at(i, j).reduceDenominators();
        if (!entryInSubring(e, subring)) {
          out.primitive = false;
          out.offendingGen = lie.gen(d).name;
          out.offendingEntry = "F(" + lie.gen(d).name + ")[" + std::to_string(i) +
                               "," + std::to_string(j) + "] = " + e.str();
          return out;
        }
        over.at(i, j) = liftElement(e, subring);
      }
    out.F.push_back(std::move(over));
  }
  out.primitive = true;
  return out;
}

}  // namespace superpv
