// Acceptance battery: one pass/fail line per criterion, all checks exact.
// The whole battery runs twice with the same seed; the final criterion
// demands byte-identical reports across the two runs.

#include <iostream>
#include <sstream>

#include "superpv/boson.hpp"
#include "superpv/doublering.hpp"
#include "superpv/dual.hpp"
#include "superpv/errors.hpp"
#include "superpv/pvring.hpp"
#include "superpv/wronskian.hpp"
#include "../test_models.hpp"

using namespace superpv;
using namespace superpv::testmodels;

namespace {

constexpr uint64_t kSeed = 0xC0FFEE123ull;

struct Criterion {
  std::string name;
  bool pass = true;
  std::string detail;
};

void require(Criterion& c, bool cond, const std::string& what) {
  if (!cond && c.pass) {
    c.pass = false;
    c.detail = what;
  }
}

// ---- 1. Koszul suite ------------------------------------------------------
Criterion koszulSuite(uint64_t seed) {
  Criterion c{"koszul"};
  auto ring = lambdaRing(4);
  std::mt19937_64 rng(seed);
  RandomElemOpts opts;
  int checked = 0;
  for (int s = 0; s < 1000; ++s) {
    Parity pa = (rng() & 1) ? Parity::Odd : Parity::Even;
    Parity pb = (rng() & 1) ? Parity::Odd : Parity::Even;
    SuperElem a = randomHomogeneous(ring, pa, rng, opts);
    SuperElem b = randomHomogeneous(ring, pb, rng, opts);
    bool bothOdd = a.homogeneousOfParity(Parity::Odd) && !a.isZero() &&
                   b.homogeneousOfParity(Parity::Odd) && !b.isZero();
    SuperElem ba = b * a;
    require(c, a * b == (bothOdd ? -ba : ba), "ab != (-1)^{|a||b|} ba");
    ++checked;
  }
  for (int i = 0; i < 4; ++i) {
    auto th = SuperElem::generator(ring, i);
    require(c, (th * th).isZero(), "theta^2 != 0");
  }
  c.detail = c.pass ? std::to_string(checked) + " pairs" : c.detail;
  return c;
}

// ---- 2. Inversion suite ---------------------------------------------------
Criterion inversionSuite(uint64_t seed) {
  Criterion c{"inversion"};
  auto ring = lambdaRing(4);
  std::mt19937_64 rng(seed + 1);
  RandomElemOpts opts;
  opts.maxTerms = 2;
  opts.maxBodyDeg = 1;
  std::vector<std::pair<int, int>> formats{{1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}};
  for (int s = 0; s < 200; ++s) {
    auto [m, n] = formats[s % formats.size()];
    SuperMatrix X = randomGlMatrix(ring, m, n, rng, opts);
    SuperMatrix I = SuperMatrix::identity(ring, m, n);
    SuperMatrix Xi = X.invertEven();
    require(c, X * Xi == I && Xi * X == I, "X X^{-1} != I");
  }
  for (int s = 0; s < 200; ++s) {
    auto [m, n] = formats[s % formats.size()];
    SuperMatrix X = randomClassifiedMatrix(ring, m, n, MatClass::Even, rng, opts);
    if (s % 3 == 0)
      for (int j = 0; j < X.dim(); ++j) X.at(0, j) = X.at(0, j).soul();
    bool inverted = false;
    try {
      X.invertEven();
      inverted = true;
    } catch (const SingularBodyError&) {
    }
    require(c, inverted == X.isGl(), "is_gl disagrees with inversion success");
  }
  if (c.pass) c.detail = "200 inversions + 200 is_gl probes";
  return c;
}

// ---- 3. Action suite ------------------------------------------------------
Criterion actionSuite(uint64_t seed) {
  Criterion c{"action"};
  auto ring = lambdaRing(2);
  auto lie = lieSpec(true);
  auto act = modelAction(lie, ring);
  CheckReport leib = checkSuperLeibniz(*act, 500, seed + 2);
  require(c, leib.pass, leib.detail);
  CheckReport brk = checkBracketCompat(*act, *lie);
  require(c, brk.pass, brk.detail);
  if (c.pass) c.detail = "500 products";
  return c;
}

// ---- 4. Cocycle suite -----------------------------------------------------
SuperMatrix applyBosonKey(const DAction& act, const BosonElem::BKey& key,
                          SuperMatrix M) {
  if (key.sig) M = M.sigma();
  for (auto it = key.word.rbegin(); it != key.word.rend(); ++it)
    M = matrixApplyGen(act, *it, M);
  return M;
}

Criterion cocycleSuite(uint64_t seed) {
  Criterion c{"cocycle"};
  std::mt19937_64 rng(seed + 3);
  auto ring = lambdaRing(2);
  auto lieD = lieSpec(true);
  auto actD = modelAction(lieD, ring);
  auto lieA = lieSpec(false);
  auto actA = modelAction(lieA, ring);
  std::vector<std::pair<int, int>> formats{{1, 1}, {2, 1}, {1, 2}, {2, 2}};
  int tables = 0;
  for (int s = 0; s < 20; ++s) {
    auto [m, n] = formats[s % formats.size()];
    bool withDelta = s % 2 == 0;
    const LiePtr& lie = withDelta ? lieD : lieA;
    const std::shared_ptr<DAction>& act = withDelta ? actD : actA;
    DModule mod = withDelta
                      ? randomConsistentDeltaModule(lie, ring, *act, m, n, rng)
                      : randomAbelianModule(lie, ring, m, n, rng);
    ++tables;
    auto monos = enumeratePbwMonos(*lie, 2);
    for (auto& w1 : monos)
      for (auto& w2 : monos) {
        DWord prod = DWord::fromSequence(lie, w1) * DWord::fromSequence(lie, w2);
        SuperMatrix lhs = extendStructureMap(mod, prod, *act, false);
        SuperMatrix Fw2 = extendStructureMap(mod, DWord::fromSequence(lie, w2), *act,
                                             false);
        SuperMatrix rhs(ring, m, n);
        for (auto& [pair, coef] : deltaB(BosonElem::fromWord(lie, w1))) {
          if (pair.second.sig != 0) {
            require(c, false, "coproduct left the coideal");
            continue;
          }
          SuperMatrix left = applyBosonKey(*act, pair.first, Fw2);
          SuperMatrix right = extendStructureMap(
              mod, DWord::fromSequence(lie, pair.second.word), *act, false);
          rhs = rhs + (left * right).scaledRat(coef);
        }
        require(c, lhs == rhs, "F(w1 w2) != (w1_[1] F(w2)) F(w1_[2])");
      }
  }
  if (c.pass) c.detail = std::to_string(tables) + " tables, word pairs <= 2";
  return c;
}

// ---- 5. Bosonization suite ------------------------------------------------
Criterion bosonSuite(uint64_t) {
  Criterion c{"bosonization"};
  for (bool withDelta : {false, true}) {
    auto lie = lieSpec(withDelta);
    CheckReport r1 = checkCoassociativity(lie, 3);
    require(c, r1.pass, r1.detail);
    CheckReport r2 = checkAntipodeAlgebra(lie, 3);
    require(c, r2.pass, r2.detail);
    CheckReport r3 = checkAntipodeIdentities(lie, 3);
    require(c, r3.pass, r3.detail);
  }
  if (c.pass) c.detail = "both Lie specs, words <= 3";
  return c;
}

// ---- 6. Solver exactness --------------------------------------------------
using PolyVec = std::vector<Rat>;

PolyVec polyMul(const PolyVec& a, const PolyVec& b, int N) {
  PolyVec r(N, Rat(0));
  for (int i = 0; i < static_cast<int>(a.size()) && i < N; ++i)
    for (int j = 0; j + i < N && j < static_cast<int>(b.size()); ++j)
      r[i + j] += a[i] * b[j];
  return r;
}

using PolyMat = std::vector<std::vector<PolyVec>>;

PolyMat picardOracle(const PolyMat& M, int dim, int N) {
  PolyMat X(dim, std::vector<PolyVec>(dim, PolyVec(N, Rat(0))));
  for (int i = 0; i < dim; ++i) X[i][i][0] = 1;
  for (int iter = 0; iter < N; ++iter) {
    PolyMat next(dim, std::vector<PolyVec>(dim, PolyVec(N, Rat(0))));
    for (int i = 0; i < dim; ++i) next[i][i][0] = 1;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) {
          PolyVec prod = polyMul(M[i][k], X[k][j], N);
          for (int p = 0; p + 1 < N; ++p) next[i][j][p + 1] += prod[p] / Rat(p + 1);
        }
    X = std::move(next);
  }
  return X;
}

PolyVec coeffsOf(const SuperElem& e, int N) {
  PolyVec out(N, Rat(0));
  for (auto& [key, cf] : e.terms()) {
    if (key.odd != 0 || !cf.isPolynomial()) return {};
    Rat den = cf.den().constantValue();
    for (auto& [exp, coef] : cf.num().terms())
      if (static_cast<int>(exp[0]) < N) out[exp[0]] += coef / den;
  }
  return out;
}

Criterion solverSuite(uint64_t) {
  Criterion c{"solver-exactness"};
  SeriesModel model = SeriesModel::make(0, false);
  SuperMatrix F(model.ring, 1, 0);
  F.at(0, 0) = SuperElem::one(model.ring);
  DModule mod(model.lie, model.ring, 1, 0, {F});
  int N = 12;
  auto sol = seriesSolve(mod, model, N);
  PolyVec got = coeffsOf(sol.X.at(0, 0), N);
  Rat fact(1);
  for (int k = 0; k < N; ++k) {
    if (k > 0) fact *= Rat(k);
    require(c, got[k] == Rat(1) / fact, "coefficient != 1/k!");
  }
  PolyMat M(1, std::vector<PolyVec>(1, PolyVec{Rat(1)}));
  PolyMat OX = picardOracle(M, 1, N);
  for (int k = 0; k < N; ++k)
    require(c, OX[0][0][k] == got[k], "Picard oracle disagrees");
  if (c.pass) c.detail = "exp series to order 12";
  return c;
}

// ---- 7. Round trip --------------------------------------------------------
Criterion roundTripSuite(uint64_t seed) {
  Criterion c{"round-trip"};
  SeriesModel model = SeriesModel::make(2, true);
  std::mt19937_64 rng(seed + 4);
  std::vector<std::pair<int, int>> formats{{1, 0}, {0, 1}, {1, 1}, {2, 0}, {2, 1}};
  int N = 6;
  for (int s = 0; s < 10; ++s) {
    auto [m, n] = formats[s % formats.size()];
    DModule mod =
        randomConsistentDeltaModule(model.lie, model.ring, *model.action, m, n, rng);
    auto sol = seriesSolve(mod, model, N);
    auto res = glPrimitiveCheck(sol.X, *model.action, model.ring);
    require(c, res.primitive, "solution not GL-primitive over the model ring");
    if (!res.primitive) continue;
    for (int g = 0; g < 2; ++g)
      for (int i = 0; i < m + n; ++i)
        for (int j = 0; j < m + n; ++j) {
          SuperElem got = seriesExpandT(res.F[g].at(i, j), 0, N - 1);
          SuperElem want = truncateT(mod.F(g).at(i, j), 0, N - 1);
          require(c, got == want, "recovered F differs mod t^{N-1}");
        }
  }
  if (c.pass) c.detail = "10 modules, N=6";
  return c;
}

// ---- 8. Z/W suite ---------------------------------------------------------
Criterion zwSuite(uint64_t seed) {
  Criterion c{"zw"};
  auto ring = lambdaRing(2);
  auto lieD = lieSpec(true);
  auto actD = modelAction(lieD, ring);
  auto lieA = lieSpec(false);
  auto actA = modelAction(lieA, ring);
  std::mt19937_64 rng(seed + 5);
  std::vector<std::pair<int, int>> formats{{1, 0}, {0, 1}, {1, 1}, {2, 0}, {2, 1}};
  for (int s = 0; s < 10; ++s) {
    auto [m, n] = formats[s % formats.size()];
    bool withDelta = s % 2 == 0;
    const LiePtr& lie = withDelta ? lieD : lieA;
    const std::shared_ptr<DAction>& act = withDelta ? actD : actA;
    DModule mod = withDelta
                      ? randomConsistentDeltaModule(lie, ring, *act, m, n, rng)
                      : randomAbelianModule(lie, ring, m, n, rng);
    ZWReport rep = hopfDataCheck(mod, *act);
    require(c, rep.invariance.pass, rep.invariance.detail);
    require(c, rep.inverses.pass, rep.inverses.detail);
    require(c, rep.antipode.pass, rep.antipode.detail);
    require(c, rep.comatrix.pass, rep.comatrix.detail);
    require(c, rep.coaction.pass, rep.coaction.detail);
  }
  if (c.pass) c.detail = "10 modules, formats <= 2|1";
  return c;
}

// ---- 9. Wronskian suite ---------------------------------------------------
Criterion wronskianSuite(uint64_t seed) {
  Criterion c{"wronskian"};
  auto ring = lambdaRing(2);
  auto lie = lieSpec(true);
  auto act = modelAction(lie, ring);
  auto one = SuperElem::one(ring);
  auto t = SuperElem::bodyVar(ring, 0);
  auto th = SuperElem::generator(ring, 0);

  auto cert1 = wronskianSearch({one, t}, 2, *act, 2);
  require(c, cert1.found, "(1,t) certificate missing at bound 2");
  auto cert2 = wronskianSearch({one, th}, 1, *act, 2);
  require(c, cert2.found, "(1|theta) certificate missing at bound 2");

  std::mt19937_64 rng(seed + 6);
  RandomElemOpts opts;
  opts.rationalDens = false;
  opts.maxBodyDeg = 2;
  // 20 constructed constant-dependent tuples: append a rational combination.
  for (int s = 0; s < 20; ++s) {
    Parity p = (s % 2) ? Parity::Odd : Parity::Even;
    int k = 1 + static_cast<int>(rng() % 2);
    std::vector<SuperElem> base;
    for (int i = 0; i < k; ++i) {
      SuperElem e = randomHomogeneous(ring, p, rng, opts);
      if (e.isZero()) e = p == Parity::Even ? one : th;
      base.push_back(e);
    }
    SuperElem dep = SuperElem::zero(ring);
    for (auto& e : base) dep = dep + e.scaledRat(randomRat(rng, 2));
    base.push_back(dep);
    int m = p == Parity::Even ? static_cast<int>(base.size()) : 0;
    auto cert = wronskianSearch(base, m, *act, 2);
    require(c, !cert.found, "certificate found for a dependent tuple");
  }
  // oracle consistency on spans of dimension <= 4
  for (int s = 0; s < 15; ++s) {
    int m = 1 + static_cast<int>(rng() % 2);
    int n = static_cast<int>(rng() % 3);
    std::vector<SuperElem> elems;
    for (int i = 0; i < m; ++i) {
      SuperElem e = randomHomogeneous(ring, Parity::Even, rng, opts);
      elems.push_back(e.isZero() ? one : e);
    }
    for (int i = 0; i < n; ++i) {
      SuperElem e = randomHomogeneous(ring, Parity::Odd, rng, opts);
      elems.push_back(e.isZero() ? th : e);
    }
    auto cert = wronskianSearch(elems, m, *act, 2);
    bool dependent = !kernelOfElements(elems).empty();
    require(c, !(cert.found && dependent), "certificate contradicts the constants oracle");
    require(c, !(dependent && cert.found), "dependent tuple certified");
  }
  if (c.pass) c.detail = "2 certificates, 20 dependent tuples, 15 oracle probes";
  return c;
}

// ---- 10. Even-reduction consistency ---------------------------------------
Criterion reductionSuite(uint64_t seed) {
  Criterion c{"even-reduction"};
  SeriesModel model = SeriesModel::make(2, true);
  std::mt19937_64 rng(seed + 7);
  int N = 8;
  for (int s = 0; s < 5; ++s) {
    int m = 1 + static_cast<int>(rng() % 2);
    int n = 1;
    DModule mod =
        randomConsistentDeltaModule(model.lie, model.ring, *model.action, m, n, rng);
    auto sol = seriesSolve(mod, model, N);
    EvenReduction red = evenReduction(mod, *model.action);
    int dim = m + n;
    PolyMat M(dim, std::vector<PolyVec>(dim));
    bool ok = true;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        M[i][j] = coeffsOf(red.matrices[0].at(i, j), N);
        ok = ok && !(M[i][j].empty() && !red.matrices[0].at(i, j).isZero());
      }
    require(c, ok, "reduced system is not polynomial");
    PolyMat OX = picardOracle(M, dim, N);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        PolyVec got = coeffsOf(sol.X.at(i, j).body(), N);
        for (int k = 0; k < N; ++k)
          require(c, got[k] == OX[i][j][k],
                  "body of the solution differs from the classical oracle");
      }
  }
  if (c.pass) c.detail = "5 modules, N=8, independent Picard oracle";
  return c;
}

// ---- 11. Dual suite -------------------------------------------------------
Criterion dualSuite(uint64_t seed) {
  Criterion c{"dual"};
  auto ring = lambdaRing(2);
  auto lie = lieSpec(true);
  auto act = modelAction(lie, ring);
  std::mt19937_64 rng(seed + 8);
  std::vector<std::pair<int, int>> formats{{1, 1}, {2, 1}, {2, 2}};
  for (int s = 0; s < 6; ++s) {
    auto [m, n] = formats[s % formats.size()];
    DModule mod = randomConsistentDeltaModule(lie, ring, *act, m, n, rng);
    DModule dual = dualStructure(mod, *act, Side::Left, false);
    DModule dd = dualStructure(dual, *act, Side::Right, false);
    for (int d = 0; d < 2; ++d)
      require(c, dd.F(d) == mod.F(d), "double dual is not the identity");

    int dim = m + n;
    auto twist = [&](const SuperElem& x, bool apply) { return apply ? x.sigma() : x; };
    for (int d = 0; d < 2; ++d) {
      bool dOdd = lie->parity(d) == Parity::Odd;
      // eval D-linearity in coordinates
      for (int i = 0; i < dim; ++i) {
        bool viOdd = i >= m;
        for (int j = 0; j < dim; ++j) {
          bool fjOdd = j >= m;
          SuperElem fdv = twist(mod.F(d).at(i, j), fjOdd);
          SuperElem dfv = twist(dual.F(d).at(j, i), viOdd);
          if (dOdd && viOdd) dfv = -dfv;
          require(c, (fdv + dfv).isZero(), "eval is not D-linear");
        }
      }
      // coeval invariance
      std::vector<std::vector<SuperElem>> acc(
          dim, std::vector<SuperElem>(dim, SuperElem::zero(ring)));
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
          SuperElem x = dual.F(d).at(i, j);
          if (!x.isZero()) {
            bool fjOdd = j >= m;
            acc[j][i] = acc[j][i] + twist(x, fjOdd);
          }
        }
        bool viOdd = i >= m;
        Rat sign = (dOdd && viOdd) ? Rat(-1) : Rat(1);
        for (int k = 0; k < dim; ++k) {
          SuperElem x = mod.F(d).at(i, k);
          if (!x.isZero()) acc[i][k] = acc[i][k] + x.scaledRat(sign);
        }
      }
      for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k)
          require(c, acc[j][k].isZero(), "coeval is not D-linear");
    }
  }
  if (c.pass) c.detail = "6 modules, formats <= 2|2";
  return c;
}

std::vector<Criterion> runAll(uint64_t seed) {
  return {
      koszulSuite(seed),    inversionSuite(seed), actionSuite(seed),
      cocycleSuite(seed),   bosonSuite(seed),     solverSuite(seed),
      roundTripSuite(seed), zwSuite(seed),        wronskianSuite(seed),
      reductionSuite(seed), dualSuite(seed),
  };
}

std::string render(const std::vector<Criterion>& cs) {
  std::ostringstream out;
  for (size_t i = 0; i < cs.size(); ++i) {
    out << (cs[i].pass ? "PASS" : "FAIL") << " criterion-" << (i + 1) << " "
        << cs[i].name;
    if (!cs[i].detail.empty()) out << ": " << cs[i].detail;
    out << "\n";
  }
  return out.str();
}

}  // namespace

int main() {
  std::vector<Criterion> first = runAll(kSeed);
  std::vector<Criterion> second = runAll(kSeed);
  std::string r1 = render(first);
  std::string r2 = render(second);

  std::cout << r1;
  bool deterministic = r1 == r2;
  std::cout << (deterministic ? "PASS" : "FAIL")
            << " criterion-12 determinism: rerun with the fixed seed is byte-identical\n";

  bool all = deterministic;
  for (auto& c : first) all = all && c.pass;
  std::cout << (all ? "ACCEPTANCE: all criteria pass" : "ACCEPTANCE: FAILURES PRESENT")
            << "\n";
  return all ? 0 : 1;
}
