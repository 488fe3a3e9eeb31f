#include "superpv/solver.hpp"

#include "superpv/errors.hpp"

namespace superpv {

SeriesModel SeriesModel::make(int oddGens, bool withDelta) {
  if (withDelta && oddGens < 1)
    throw ValidationError("series model with delta needs at least one odd generator");
  std::vector<RingGen> gens;
  for (int i = 0; i < oddGens; ++i)
    gens.push_back({"th" + std::to_string(i + 1), Parity::Odd});
  SeriesModel model;
  model.ring = std::make_shared<RingSpec>(std::vector<std::string>{"t"}, std::move(gens));
  std::vector<LieGen> lgens{{"del", Parity::Even}};
  if (withDelta) lgens.push_back({"delta", Parity::Odd});
  auto lie = std::make_shared<LieSpec>(std::move(lgens));
  if (withDelta) lie->setBracket(1, 1, GenCombo{{0, Rat(2)}});
  model.lie = lie;
  model.delGen = 0;
  model.deltaGen = withDelta ? 1 : -1;
  model.action = std::make_shared<DAction>(model.lie, model.ring);
  model.action->setOnBodyVar(0, 0, SuperElem::one(model.ring));  // del t = 1
  if (withDelta) {
    model.action->setOnBodyVar(1, 0, SuperElem::generator(model.ring, 0));  // delta t = th1
    model.action->setOnGen(1, 0, SuperElem::one(model.ring));               // delta th1 = 1
  }
  return model;
}

namespace {

void requirePolynomialT(const SuperElem& a, const char* where) {
  auto pow = a.denPow();
  for (int32_t p : pow)
    if (p != 0) throw ValidationError(std::string(where) + ": entries must be polynomial");
  for (auto& [k, c] : a.terms())
    if (!c.isPolynomial())
      throw ValidationError(std::string(where) + ": entries must be polynomial");
}

}  // namespace

SuperElem coeffOfT(const SuperElem& a, int var, uint32_t k) {
  requirePolynomialT(a, "coeffOfT");
  TermMap out;
  for (auto& [key, c] : a.terms()) {
    MPoly slice = c.num().coeffOfPower(var, k);
    if (slice.isZero()) continue;
    out[key] = RatFunc::fromPoly(std::move(slice));
  }
  return SuperElem::fromTerms(a.ring(), std::move(out));
}

SuperElem truncateT(const SuperElem& a, int var, uint32_t N) {
  requirePolynomialT(a, "truncateT");
  TermMap out;
  for (auto& [key, c] : a.terms()) {
    MPoly kept(c.num().nvars());
    for (auto& [e, coef] : c.num().terms())
      if (e[var] < N) kept.addTerm(e, coef);
    if (kept.isZero()) continue;
    out[key] = RatFunc::fromPoly(std::move(kept));
  }
  return SuperElem::fromTerms(a.ring(), std::move(out));
}

SuperElem mulByTPow(const SuperElem& a, int var, uint32_t k) {
  int nv = a.ring()->bodyVarCount();
  return a.scaled(RatFunc::fromPoly(MPoly::variable(nv, var, k)));
}

SuperElem seriesExpandT(const SuperElem& a, int var, uint32_t N) {
  auto pow = a.denPow();
  for (int32_t p : pow)
    if (p != 0)
      throw ValidationError("seriesExpandT: distinguished denominators unsupported");
  int nv = a.ring()->bodyVarCount();
  TermMap out;
  for (auto& [key, c] : a.terms()) {
    // Slice numerator and denominator along t; invert the denominator as a
    // power series with rational-function coefficients.
    uint32_t dq = c.den().degree(var);
    std::vector<RatFunc> q(dq + 1, RatFunc(nv));
    for (uint32_t i = 0; i <= dq; ++i) q[i] = RatFunc::fromPoly(c.den().coeffOfPower(var, i));
    if (q[0].isZero())
      throw ValidationError("seriesExpandT: denominator vanishes at t=0");
    std::vector<RatFunc> u(N, RatFunc(nv));
    RatFunc q0inv = q[0].inverse();
    for (uint32_t k = 0; k < N; ++k) {
      RatFunc acc = k == 0 ? RatFunc::constant(nv, Rat(1)) : RatFunc(nv);
      for (uint32_t i = 1; i <= std::min<uint32_t>(k, dq); ++i)
        acc = acc - q[i] * u[k - i];
      u[k] = acc * q0inv;
    }
    uint32_t dp = c.num().degree(var);
    MPoly expanded(nv);
    for (uint32_t k = 0; k < N; ++k) {
      RatFunc coef(nv);
      for (uint32_t i = 0; i <= std::min(k, dp); ++i)
        coef = coef + RatFunc::fromPoly(c.num().coeffOfPower(var, i)) * u[k - i];
      if (coef.isZero()) continue;
      if (!coef.isPolynomial())
        throw ValidationError("seriesExpandT: mixed-variable denominators unsupported");
      expanded = expanded + coef.num().scaled(Rat(1) / coef.den().constantValue()) *
                                MPoly::variable(nv, var, k);
    }
    if (expanded.isZero()) continue;
    TermKey k2 = key;
    auto it = out.find(k2);
    if (it == out.end())
      out[k2] = RatFunc::fromPoly(expanded);
    else
      it->second = it->second + RatFunc::fromPoly(expanded);
  }
  return SuperElem::fromTerms(a.ring(), std::move(out));
}

namespace {

SuperMatrix matrixCoeffOfT(const SuperMatrix& x, int var, uint32_t k) {
  SuperMatrix r = x;
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j) r.at(i, j) = coeffOfT(x.at(i, j), var, k);
  return r;
}

SuperMatrix matrixTruncateT(const SuperMatrix& x, int var, uint32_t N) {
  SuperMatrix r = x;
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j) r.at(i, j) = truncateT(x.at(i, j), var, N);
  return r;
}

// X_{k+1} = [M X]_k / (k+1) with X_0 = I: the classical fundamental-series
// recursion for dX/dt = M X.
SuperMatrix odeRecursion(const SuperMatrix& M, int var, int N, const RingPtr& ring,
                         int m, int n) {
  uint32_t degM = 0;
  for (int i = 0; i < M.dim(); ++i)
    for (int j = 0; j < M.dim(); ++j)
      for (auto& [key, c] : M.at(i, j).terms())
        degM = std::max(degM, c.num().degree(var));
  std::vector<SuperMatrix> Mk;
  for (uint32_t k = 0; k <= degM; ++k) Mk.push_back(matrixCoeffOfT(M, var, k));
  std::vector<SuperMatrix> Xk{SuperMatrix::identity(ring, m, n)};
  for (int k = 0; k + 1 < N; ++k) {
    SuperMatrix acc(ring, m, n);
    for (uint32_t i = 0; i <= std::min<uint32_t>(degM, k); ++i)
      acc = acc + Mk[i] * Xk[k - i];
    Xk.push_back(acc.scaledRat(Rat(1, k + 1)));
  }
  SuperMatrix X(ring, m, n);
  for (int k = 0; k < N && k < static_cast<int>(Xk.size()); ++k) {
    for (int i = 0; i < X.dim(); ++i)
      for (int j = 0; j < X.dim(); ++j)
        X.at(i, j) = X.at(i, j) + mulByTPow(Xk[k].at(i, j), var, k);
  }
  return X;
}

// Splits x = A + th1 B with A, B free of th1 (slot 0).
void splitTheta1(const SuperElem& x, SuperElem& A, SuperElem& B) {
  TermMap a, b;
  for (auto& [key, c] : x.terms()) {
    if (key.odd & 1) {
      TermKey k2 = key;
      k2.odd &= ~uint64_t(1);
      b[k2] = c;
    } else {
      a[key] = c;
    }
  }
  A = SuperElem::fromTerms(x.ring(), std::move(a));
  B = SuperElem::fromTerms(x.ring(), std::move(b));
}

}  // namespace

SeriesSolution seriesSolve(const DModule& mod, const SeriesModel& model, int N,
                           bool verify) {
  if (mod.ring() != model.ring || mod.lie() != model.lie)
    throw RingMismatchError("seriesSolve: module not over the model");
  if (N < 1) throw ValidationError("seriesSolve: order must be positive");
  for (int g = 0; g < mod.lie()->genCount(); ++g)
    for (int i = 0; i < mod.m() + mod.n(); ++i)
      for (int j = 0; j < mod.m() + mod.n(); ++j)
        requirePolynomialT(mod.F(g).at(i, j), "seriesSolve");
  if (verify) {
    CheckReport r = checkModuleConsistency(mod, *model.action);
    if (!r.pass) throw InconsistentModuleError(r.detail);
  }

  SuperMatrix X(model.ring, mod.m(), mod.n());
  if (model.deltaGen < 0) {
    X = odeRecursion(mod.F(model.delGen), model.tVar, N, model.ring, mod.m(), mod.n());
  } else {
    // F(delta) = P + th1 Q; then B = P A and dA/dt = (sigma(P) P + Q) A with
    // A(0) = I, and X = A + th1 B.
    const SuperMatrix& Fd = mod.F(model.deltaGen);
    SuperMatrix P(model.ring, mod.m(), mod.n()), Q(model.ring, mod.m(), mod.n());
    for (int i = 0; i < Fd.dim(); ++i)
      for (int j = 0; j < Fd.dim(); ++j) splitTheta1(Fd.at(i, j), P.at(i, j), Q.at(i, j));
    SuperMatrix M = P.sigma() * P + Q;
    SuperMatrix A = odeRecursion(M, model.tVar, N, model.ring, mod.m(), mod.n());
    SuperMatrix B = matrixTruncateT(P * A, model.tVar, N);
    X = A;
    SuperElem th1 = SuperElem::generator(model.ring, 0);
    for (int i = 0; i < X.dim(); ++i)
      for (int j = 0; j < X.dim(); ++j) X.at(i, j) = X.at(i, j) + th1 * B.at(i, j);
  }
  return {X, N};
}

CheckReport seriesResidualCheck(const DModule& mod, const SeriesModel& model,
                                const SuperMatrix& X, int N) {
  for (int d = 0; d < mod.lie()->genCount(); ++d) {
    SuperMatrix residual = matrixApplyGen(*model.action, d, X) - mod.F(d) * X;
    residual = matrixTruncateT(residual, model.tVar, N - 1);
    if (!residual.isZero())
      return CheckReport::failed("residual dX - F(d)X != 0 mod t^" +
                                 std::to_string(N - 1) + " for " +
                                 mod.lie()->gen(d).name);
  }
  return CheckReport::ok();
}

SplittingReport splittingReport(const DModule& mod, const SeriesModel& model, int N) {
  SplittingReport rep;
  SeriesSolution sol = seriesSolve(mod, model, N);
  rep.X = sol.X;
  rep.residuals = seriesResidualCheck(mod, model, sol.X, N);

  // The solution columns realize the invariant functionals; the count is full
  // exactly when the matrix is invertible at truncation order.
  bool gl = sol.X.isGl();
  rep.fullCount = gl && rep.residuals.pass;
  if (rep.fullCount) {
    rep.evenCount = mod.m();
    rep.oddCount = mod.n();
  }

  EvenReduction red = evenReduction(mod, *model.action);
  rep.bodyX = SuperMatrix(red.evenRing, mod.m(), mod.n());
  for (int i = 0; i < sol.X.dim(); ++i)
    for (int j = 0; j < sol.X.dim(); ++j)
      rep.bodyX.at(i, j) = substituteOddZero(sol.X.at(i, j), red.evenRing);
  int evenDel = -1;
  for (size_t e = 0; e < red.baseGenOfEven.size(); ++e)
    if (red.baseGenOfEven[e] == model.delGen) evenDel = static_cast<int>(e);
  if (evenDel < 0) {
    rep.bodyConsistent = CheckReport::failed("even reduction lost the even derivation");
    return rep;
  }
  SuperMatrix residual = matrixApplyGen(*red.action, evenDel, rep.bodyX) -
                         red.matrices[evenDel] * rep.bodyX;
  bool ok = true;
  for (int i = 0; i < residual.dim() && ok; ++i)
    for (int j = 0; j < residual.dim() && ok; ++j)
      ok = truncateT(residual.at(i, j), model.tVar, N - 1).isZero();
  rep.bodyConsistent = ok ? CheckReport::ok()
                          : CheckReport::failed(
                                "body of the solution does not solve the reduced system");
  return rep;
}

}  // namespace superpv
