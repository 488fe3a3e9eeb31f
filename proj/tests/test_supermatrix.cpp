#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superpv/errors.hpp"
#include "test_models.hpp"

using namespace superpv;
using namespace superpv::testmodels;

TEST_CASE("classification follows the block pattern") {
  auto ring = lambdaRing(2);
  auto t = SuperElem::bodyVar(ring, 0);
  auto th = SuperElem::generator(ring, 0);
  auto one = SuperElem::one(ring);

  SuperMatrix even(ring, 1, 1);
  even.at(0, 0) = t;
  even.at(1, 1) = one;
  CHECK(even.classify() == MatClass::Even);

  SuperMatrix odd(ring, 1, 1);
  odd.at(0, 0) = th;
  odd.at(1, 1) = th;
  CHECK(odd.classify() == MatClass::Odd);

  SuperMatrix mixed(ring, 1, 1);
  mixed.at(0, 0) = t;
  mixed.at(0, 1) = t;  // even entry in an odd slot
  mixed.at(1, 1) = one;
  CHECK(mixed.classify() == MatClass::Mixed);
}

TEST_CASE("classification is additive under products") {
  auto ring = lambdaRing(3);
  std::mt19937_64 rng(11);
  RandomElemOpts opts;
  opts.maxBodyDeg = 1;
  for (int s = 0; s < 60; ++s) {
    int m = 1 + static_cast<int>(rng() % 2), n = 1 + static_cast<int>(rng() % 2);
    auto pick = [&](MatClass c) { return randomClassifiedMatrix(ring, m, n, c, rng, opts); };
    CHECK((pick(MatClass::Even) * pick(MatClass::Even)).classifiesAs(MatClass::Even));
    CHECK((pick(MatClass::Even) * pick(MatClass::Odd)).classifiesAs(MatClass::Odd));
    CHECK((pick(MatClass::Odd) * pick(MatClass::Odd)).classifiesAs(MatClass::Even));
  }
}

TEST_CASE("det0 on the stated examples") {
  auto ring = lambdaRing(1);
  auto t = SuperElem::bodyVar(ring, 0);
  auto th = SuperElem::generator(ring, 0);
  auto one = SuperElem::one(ring);

  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      if (m + n == 0) continue;
      CHECK(SuperMatrix::identity(ring, m, n).det0() == one);
    }

  // generic 1|1: det0 = t11 * t22
  auto grid = std::make_shared<RingSpec>(
      std::vector<std::string>{},
      std::vector<RingGen>{{"t11", Parity::Even}, {"t12", Parity::Odd},
                           {"t21", Parity::Odd}, {"t22", Parity::Even}});
  SuperMatrix T(grid, 1, 1);
  T.at(0, 0) = SuperElem::generator(grid, 0);
  T.at(0, 1) = SuperElem::generator(grid, 1);
  T.at(1, 0) = SuperElem::generator(grid, 2);
  T.at(1, 1) = SuperElem::generator(grid, 3);
  CHECK(T.det0() == SuperElem::generator(grid, 0) * SuperElem::generator(grid, 3));

  SuperMatrix X(ring, 1, 1);
  X.at(0, 0) = t;
  X.at(0, 1) = th;
  X.at(1, 0) = th;
  X.at(1, 1) = one;
  CHECK(X.det0() == t);

  SuperMatrix oddM(ring, 1, 1);
  oddM.at(0, 0) = th;
  oddM.at(1, 1) = th;
  CHECK_THROWS_AS(oddM.det0(), NotEvenMatrixError);
}

TEST_CASE("invert_even on the stated examples") {
  auto ring = lambdaRing(2);
  auto th = SuperElem::generator(ring, 0);
  auto one = SuperElem::one(ring);
  auto I = SuperMatrix::identity(ring, 1, 1);

  CHECK(I.invertEven() == I);

  SuperMatrix X(ring, 1, 1);
  X.at(0, 0) = one;
  X.at(1, 1) = one;
  X.at(0, 1) = th;
  X.at(1, 0) = th;
  SuperMatrix Xi = X.invertEven();
  CHECK(Xi.at(0, 1) == -th);
  CHECK(Xi.at(1, 0) == -th);
  CHECK(X * Xi == I);
  CHECK(Xi * X == I);

  SuperMatrix S(ring, 1, 1);
  S.at(0, 0) = SuperElem::generator(ring, 0) * SuperElem::generator(ring, 1);
  S.at(1, 1) = one;
  CHECK_THROWS_AS(S.invertEven(), SingularBodyError);
  CHECK_FALSE(S.isGl());
}

TEST_CASE("is_gl examples") {
  auto ring = lambdaRing(1);
  auto t = SuperElem::bodyVar(ring, 0);
  auto th = SuperElem::generator(ring, 0);
  CHECK(SuperMatrix::identity(ring, 1, 1).isGl());

  SuperMatrix odd(ring, 1, 1);
  odd.at(0, 0) = th;
  odd.at(1, 1) = th;
  CHECK_FALSE(odd.isGl());

  SuperMatrix X(ring, 1, 1);
  X.at(0, 0) = t;
  X.at(0, 1) = th;
  X.at(1, 0) = th;
  X.at(1, 1) = SuperElem::one(ring);
  CHECK(X.isGl());
}

TEST_CASE("inversion round-trips and agrees with is_gl on random matrices") {
  auto ring = lambdaRing(4);
  std::mt19937_64 rng(31337);
  RandomElemOpts opts;
  opts.maxTerms = 2;
  opts.maxBodyDeg = 1;
  std::vector<std::pair<int, int>> formats{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {2, 2}, {3, 2}};
  for (int s = 0; s < 60; ++s) {
    auto [m, n] = formats[s % formats.size()];
    SuperMatrix X = randomGlMatrix(ring, m, n, rng, opts);
    SuperMatrix I = SuperMatrix::identity(ring, m, n);
    SuperMatrix Xi = X.invertEven();
    CHECK(X * Xi == I);
    CHECK(Xi * X == I);
  }
  // is_gl matches inversion success, including singular bodies.
  for (int s = 0; s < 60; ++s) {
    auto [m, n] = formats[s % formats.size()];
    SuperMatrix X = randomClassifiedMatrix(ring, m, n, MatClass::Even, rng, opts);
    if (s % 3 == 0) {
      // Force a singular body: zero out a row's body.
      for (int j = 0; j < X.dim(); ++j) X.at(0, j) = X.at(0, j).soul();
    }
    bool inverted = false;
    try {
      X.invertEven();
      inverted = true;
    } catch (const SingularBodyError&) {
    }
    CHECK(inverted == X.isGl());
  }
}

TEST_CASE("matrix serialization round trip") {
  auto ring = lambdaRing(2);
  std::mt19937_64 rng(8);
  RandomElemOpts opts;
  SuperMatrix X = randomClassifiedMatrix(ring, 2, 1, MatClass::Even, rng, opts);
  CHECK(parseMatrix(X.str(), ring) == X);
}
