#include "superpv/doublering.hpp"

#include "superpv/errors.hpp"

namespace superpv {

SuperMatrix GridRing::gridMatrix(int copy) const {
  SuperMatrix X(ring, m, n);
  for (int i = 0; i < X.dim(); ++i)
    for (int j = 0; j < X.dim(); ++j)
      X.at(i, j) = SuperElem::generator(ring, grid[copy][i][j]);
  return X;
}

namespace {

Parity gridParity(int i, int j, int m) {
  Parity pi = i < m ? Parity::Even : Parity::Odd;
  Parity pj = j < m ? Parity::Even : Parity::Odd;
  return pi + pj;
}

std::string copyPrefix(int c) { return "x" + std::string(static_cast<size_t>(c), 'p'); }

std::string copyDenName(int c) {
  return "det0" + std::string(static_cast<size_t>(c), 'p');
}

}  // namespace

GridRing buildGridRing(const DModule& mod, const DAction& baseAction, int copies,
                       bool verify) {
  if (mod.ring() != baseAction.ring() || mod.lie() != baseAction.lie())
    throw RingMismatchError("buildGridRing: module and action disagree");
  if (verify) {
    CheckReport r = checkModuleConsistency(mod, baseAction);
    if (!r.pass) throw InconsistentModuleError(r.detail);
  }
  const RingSpec& base = *mod.ring();
  int dim = mod.m() + mod.n();

  std::vector<RingGen> gens = base.gens();
  for (int c = 0; c < copies; ++c)
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        gens.push_back({copyPrefix(c) + std::to_string(i + 1) + std::to_string(j + 1),
                        gridParity(i, j, mod.m())});
  auto ring = std::make_shared<RingSpec>(base.bodyVars(), std::move(gens));

  GridRing dr;
  dr.m = mod.m();
  dr.n = mod.n();
  dr.copies = copies;
  dr.grid.assign(copies, std::vector<std::vector<int>>(dim, std::vector<int>(dim, -1)));
  for (int c = 0; c < copies; ++c)
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        dr.grid[c][i][j] = *ring->findGen(copyPrefix(c) + std::to_string(i + 1) +
                                          std::to_string(j + 1));

  for (auto& den : base.dens()) {
    SuperElem lifted = liftElement(SuperElem::fromTerms(mod.ring(), den.terms), ring);
    ring->addDenominator(den.name, lifted.terms());
  }
  for (int c = 0; c < copies; ++c) {
    RingPtr view = ring;
    std::vector<std::vector<SuperElem>> upper(dr.m), lower(dr.n);
    for (int i = 0; i < dr.m; ++i)
      for (int j = 0; j < dr.m; ++j)
        upper[i].push_back(SuperElem::generator(view, dr.grid[c][i][j]));
    for (int i = 0; i < dr.n; ++i)
      for (int j = 0; j < dr.n; ++j)
        lower[i].push_back(
            SuperElem::generator(view, dr.grid[c][dr.m + i][dr.m + j]));
    SuperElem det0 = detCommuting(upper, view) * detCommuting(lower, view);
    ring->addDenominator(copyDenName(c), det0.terms());
  }
  for (int c = 0; c < copies; ++c) dr.denSlot.push_back(*ring->findDen(copyDenName(c)));
  dr.ring = ring;

  dr.action = std::make_shared<DAction>(mod.lie(), dr.ring);
  for (int d = 0; d < mod.lie()->genCount(); ++d) {
    for (int v = 0; v < base.bodyVarCount(); ++v)
      dr.action->setOnBodyVar(d, v, liftElement(baseAction.onBodyVar(d, v), dr.ring));
    for (int g = 0; g < base.genCount(); ++g)
      dr.action->setOnGen(d, *dr.ring->findGen(base.gen(g).name),
                          liftElement(baseAction.onGen(d, g), dr.ring));
    for (int c = 0; c < copies; ++c)
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
          SuperElem v = SuperElem::zero(dr.ring);
          for (int k = 0; k < dim; ++k) {
            const SuperElem& fik = mod.F(d).at(i, k);
            if (fik.isZero()) continue;
            v = v + liftElement(fik, dr.ring) *
                        SuperElem::generator(dr.ring, dr.grid[c][k][j]);
          }
          dr.action->setOnGen(d, dr.grid[c][i][j], v);
        }
  }
  return dr;
}

SuperMatrix zMatrixOf(const GridRing& dr, int p, int q) {
  return dr.gridMatrix(p).invertEven() * dr.gridMatrix(q);
}

SuperMatrix wMatrixOf(const GridRing& dr, int p, int q) {
  return dr.gridMatrix(q).invertEven() * dr.gridMatrix(p);
}

ZWPair zwMatrices(const GridRing& dr) {
  return {zMatrixOf(dr, 0, 1), wMatrixOf(dr, 0, 1)};
}

SuperMatrix gridSwap(const GridRing& dr, const SuperMatrix& x) {
  if (dr.copies < 2) throw ValidationError("gridSwap: needs two grid copies");
  const RingSpec& ring = *dr.ring;
  std::vector<int> genPerm(ring.genCount());
  for (int g = 0; g < ring.genCount(); ++g) genPerm[g] = g;
  int dim = dr.m + dr.n;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      genPerm[dr.grid[0][i][j]] = dr.grid[1][i][j];
      genPerm[dr.grid[1][i][j]] = dr.grid[0][i][j];
    }
  std::vector<int> denPerm(ring.denCount());
  for (int d = 0; d < ring.denCount(); ++d) denPerm[d] = d;
  std::swap(denPerm[dr.denSlot[0]], denPerm[dr.denSlot[1]]);
  SuperMatrix out = x;
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j)
      out.at(i, j) = permuteGenerators(x.at(i, j), genPerm, denPerm);
  return out;
}

namespace {

CheckReport checkInvariance(const GridRing& dr, const SuperMatrix& Z, const char* name) {
  for (int d = 0; d < dr.action->lie()->genCount(); ++d) {
    SuperMatrix dZ = matrixApplyGen(*dr.action, d, Z);
    if (!dZ.isZero())
      return CheckReport::failed(std::string(name) + " is not annihilated by " +
                                 dr.action->lie()->gen(d).name);
  }
  return CheckReport::ok();
}

}  // namespace

ZWReport zwCheck(const DModule& mod, const DAction& baseAction) {
  GridRing dr = buildGridRing(mod, baseAction, 2);
  auto [Z, W] = zwMatrices(dr);
  ZWReport rep;
  rep.invariance = checkInvariance(dr, Z, "Z");
  if (rep.invariance.pass) rep.invariance = checkInvariance(dr, W, "W");
  SuperMatrix I = SuperMatrix::identity(dr.ring, dr.m, dr.n);
  rep.inverses = (Z * W == I && W * Z == I)
                     ? CheckReport::ok()
                     : CheckReport::failed("Z and W are not mutual inverses");
  rep.antipode = (gridSwap(dr, Z) == W && gridSwap(dr, W) == Z)
                     ? CheckReport::ok()
                     : CheckReport::failed("grid flip does not swap Z and W");
  rep.comatrix = CheckReport::ok();
  rep.coaction = CheckReport::ok();
  return rep;
}

ZWReport hopfDataCheck(const DModule& mod, const DAction& baseAction) {
  ZWReport rep = zwCheck(mod, baseAction);
  GridRing tr = buildGridRing(mod, baseAction, 3);
  SuperMatrix Z12 = zMatrixOf(tr, 0, 1);
  SuperMatrix Z23 = zMatrixOf(tr, 1, 2);
  SuperMatrix Z13 = zMatrixOf(tr, 0, 2);
  rep.comatrix = (Z13 == Z12 * Z23)
                     ? CheckReport::ok()
                     : CheckReport::failed("comatrix identity Z13 = Z12 Z23 fails");
  // 1 ⊗ X = (X ⊗ 1) Z read in grids 0,1.
  SuperMatrix X0 = tr.gridMatrix(0);
  SuperMatrix X1 = tr.gridMatrix(1);
  rep.coaction = (X1 == X0 * Z12)
                     ? CheckReport::ok()
                     : CheckReport::failed("coaction identity 1⊗X = (X⊗1)Z fails");
  return rep;
}

}  // namespace superpv
