#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superpv/errors.hpp"
#include "superpv/pvring.hpp"
#include "test_models.hpp"

using namespace superpv;
using namespace superpv::testmodels;

namespace {

// Independent classical oracle: Picard iteration X <- I + integral(M X) on
// dense polynomial matrices over the rationals, truncated mod t^N. Entries
// are coefficient vectors indexed by t-power; no SuperElem machinery.
using PolyVec = std::vector<Rat>;  // c[k] = coefficient of t^k

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
      for (int j = 0; j < dim; ++j) {
        PolyVec acc(N, Rat(0));
        for (int k = 0; k < dim; ++k) {
          PolyVec prod = polyMul(M[i][k], X[k][j], N);
          for (int p = 0; p + 1 < N; ++p) acc[p + 1] += prod[p] / Rat(p + 1);
        }
        for (int p = 1; p < N; ++p) next[i][j][p] = acc[p];
      }
    X = std::move(next);
  }
  return X;
}

// t-coefficients of a body-only element over a ring whose body field is Q(t).
PolyVec coeffsOf(const SuperElem& e, int N) {
  PolyVec out(N, Rat(0));
  for (auto& [key, c] : e.terms()) {
    REQUIRE(key.odd == 0);
    REQUIRE(c.isPolynomial());
    Rat den = c.den().constantValue();
    for (auto& [exp, coef] : c.num().terms()) {
      if (static_cast<int>(exp[0]) < N) out[exp[0]] += coef / den;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("zero system solves to the identity") {
  SeriesModel model = SeriesModel::make(1, true);
  DModule zero(model.lie, model.ring, 1, 1,
               {SuperMatrix(model.ring, 1, 1), SuperMatrix(model.ring, 1, 1)});
  auto sol = seriesSolve(zero, model, 6);
  CHECK(sol.X == SuperMatrix::identity(model.ring, 1, 1));
}

TEST_CASE("exponential system reproduces 1/k! against the Picard oracle") {
  SeriesModel model = SeriesModel::make(0, false);
  SuperMatrix F(model.ring, 1, 0);
  F.at(0, 0) = SuperElem::one(model.ring);
  DModule mod(model.lie, model.ring, 1, 0, {F});
  int N = 10;
  auto sol = seriesSolve(mod, model, N);
  PolyVec got = coeffsOf(sol.X.at(0, 0), N);
  Rat fact(1);
  for (int k = 0; k < N; ++k) {
    if (k > 0) fact *= Rat(k);
    CHECK(got[k] == Rat(1) / fact);
  }
  // and the independent oracle agrees entry-wise
  PolyMat M(1, std::vector<PolyVec>(1, PolyVec{Rat(1)}));
  PolyMat OX = picardOracle(M, 1, N);
  for (int k = 0; k < N; ++k) CHECK(OX[0][0][k] == got[k]);
}

TEST_CASE("delta-model solution satisfies the residual identities") {
  SeriesModel model = SeriesModel::make(2, true);
  SuperMatrix Fdelta(model.ring, 1, 1);
  Fdelta.at(0, 1) = SuperElem::one(model.ring);
  Fdelta.at(1, 0) = SuperElem::one(model.ring);
  DModule mod(model.lie, model.ring, 1, 1,
              {SuperMatrix::identity(model.ring, 1, 1), Fdelta});
  int N = 9;
  auto sol = seriesSolve(mod, model, N);
  CHECK(sol.X.classifiesAs(MatClass::Even));
  // X|_{t=theta=0} = I
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      SuperElem c = coeffOfT(sol.X.at(i, j).body(), 0, 0);
      CHECK(c == (i == j ? SuperElem::one(model.ring) : SuperElem::zero(model.ring)));
    }
  CHECK(seriesResidualCheck(mod, model, sol.X, N).pass);

  // the two evaluation orders delta(delta X) and del X agree mod truncation
  SuperMatrix ddX = matrixApplyGen(*model.action, 1,
                                   matrixApplyGen(*model.action, 1, sol.X));
  SuperMatrix dX = matrixApplyGen(*model.action, 0, sol.X);
  SuperMatrix diff = ddX - dX;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(truncateT(diff.at(i, j), 0, N - 2).isZero());
}

TEST_CASE("random delta modules: residuals, round trip, splitting report") {
  SeriesModel model = SeriesModel::make(2, true);
  std::mt19937_64 rng(60221023);
  int N = 6;
  for (int s = 0; s < 6; ++s) {
    int m = 1 + static_cast<int>(rng() % 2);
    int n = 1;
    DModule mod =
        randomConsistentDeltaModule(model.lie, model.ring, *model.action, m, n, rng);
    auto sol = seriesSolve(mod, model, N);
    CHECK(seriesResidualCheck(mod, model, sol.X, N).pass);

    // round trip: gl_primitive_check recovers F mod t^{N-1}
    auto res = glPrimitiveCheck(sol.X, *model.action, model.ring);
    REQUIRE(res.primitive);
    for (int g = 0; g < 2; ++g)
      for (int i = 0; i < m + n; ++i)
        for (int j = 0; j < m + n; ++j) {
          SuperElem got = seriesExpandT(res.F[g].at(i, j), 0, N - 1);
          SuperElem want = truncateT(mod.F(g).at(i, j), 0, N - 1);
          CHECK(got == want);
        }

    auto rep = splittingReport(mod, model, N);
    CHECK(rep.fullCount);
    CHECK(rep.evenCount == m);
    CHECK(rep.oddCount == n);
    CHECK(rep.residuals.pass);
    CHECK(rep.bodyConsistent.pass);
  }
}

TEST_CASE("body of the solution equals the classical fundamental matrix") {
  SeriesModel model = SeriesModel::make(2, true);
  std::mt19937_64 rng(8675309);
  int N = 8;
  for (int s = 0; s < 4; ++s) {
    DModule mod =
        randomConsistentDeltaModule(model.lie, model.ring, *model.action, 1, 1, rng);
    auto sol = seriesSolve(mod, model, N);
    EvenReduction red = evenReduction(mod, *model.action);

    int dim = 2;
    PolyMat M(dim, std::vector<PolyVec>(dim));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) M[i][j] = coeffsOf(red.matrices[0].at(i, j), N);
    PolyMat OX = picardOracle(M, dim, N);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        PolyVec got = coeffsOf(sol.X.at(i, j).body(), N);
        for (int k = 0; k < N; ++k) CHECK(got[k] == OX[i][j][k]);
      }
  }
}

TEST_CASE("splitting report counts m|n for the trivial and exponential modules") {
  SeriesModel model = SeriesModel::make(1, true);
  DModule zero(model.lie, model.ring, 1, 1,
               {SuperMatrix(model.ring, 1, 1), SuperMatrix(model.ring, 1, 1)});
  auto rep = splittingReport(zero, model, 5);
  CHECK(rep.fullCount);
  CHECK(rep.evenCount == 1);
  CHECK(rep.oddCount == 1);

  SeriesModel ma = SeriesModel::make(0, false);
  SuperMatrix F(ma.ring, 1, 0);
  F.at(0, 0) = SuperElem::one(ma.ring);
  DModule exp(ma.lie, ma.ring, 1, 0, {F});
  auto rep2 = splittingReport(exp, ma, 6);
  CHECK(rep2.fullCount);
  CHECK(rep2.evenCount == 1);
  CHECK(rep2.oddCount == 0);
  CHECK(rep2.bodyConsistent.pass);
}

TEST_CASE("non-polynomial entries are rejected") {
  SeriesModel model = SeriesModel::make(0, false);
  SuperMatrix F(model.ring, 1, 0);
  F.at(0, 0) = SuperElem::scalar(model.ring, RatFunc::variable(1, 0).inverse());
  DModule mod(model.lie, model.ring, 1, 0, {F});
  CHECK_THROWS_AS(seriesSolve(mod, model, 5), ValidationError);
}
