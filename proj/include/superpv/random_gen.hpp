#pragma once

#include <random>

#include "superpv/matrix.hpp"

namespace superpv {

// Seeded generators for random elements and matrices. mt19937_64 is
// bit-deterministic across platforms, which the reporting determinism tests
// rely on.
struct RandomElemOpts {
  int maxTerms = 3;
  int maxEvenGenDeg = 1;   // per even generator exponent
  int maxOddFactors = 2;   // odd generators per monomial
  int maxBodyDeg = 2;      // body-variable degree in numerators
  int coeffRange = 3;      // coefficients in [-range, range]
  bool rationalDens = true;  // allow denominators like t, t+1 in coefficients
};

Rat randomRat(std::mt19937_64& rng, int range);
RatFunc randomBodyScalar(const RingPtr& ring, std::mt19937_64& rng,
                         const RandomElemOpts& opts);
SuperElem randomElem(const RingPtr& ring, std::mt19937_64& rng,
                     const RandomElemOpts& opts);
SuperElem randomHomogeneous(const RingPtr& ring, Parity p, std::mt19937_64& rng,
                            const RandomElemOpts& opts);

// Random matrix whose entries are homogeneous of the parity the class
// pattern prescribes.
SuperMatrix randomClassifiedMatrix(const RingPtr& ring, int m, int n, MatClass cls,
                                   std::mt19937_64& rng, const RandomElemOpts& opts);

// Even matrix with invertible det0 body (resampled until invertible).
SuperMatrix randomGlMatrix(const RingPtr& ring, int m, int n, std::mt19937_64& rng,
                           const RandomElemOpts& opts);

}  // namespace superpv
