#include "superpv/random_gen.hpp"

namespace superpv {

Rat randomRat(std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 2);
  return rat(num(rng), den(rng));
}

RatFunc randomBodyScalar(const RingPtr& ring, std::mt19937_64& rng,
                         const RandomElemOpts& opts) {
  int nv = ring->bodyVarCount();
  std::uniform_int_distribution<int> deg(0, opts.maxBodyDeg);
  std::uniform_int_distribution<int> pick(0, std::max(0, nv - 1));
  MPoly num(nv);
  int parts = 1 + static_cast<int>(rng() % 2);
  for (int p = 0; p < parts; ++p) {
    MPoly::Exp e(nv, 0);
    if (nv > 0) {
      int d = deg(rng);
      for (int k = 0; k < d; ++k) e[pick(rng)] += 1;
    }
    num.addTerm(e, randomRat(rng, opts.coeffRange));
  }
  if (num.isZero()) num = MPoly::constant(nv, 1);
  MPoly den = MPoly::constant(nv, 1);
  if (opts.rationalDens && nv > 0 && (rng() % 4 == 0)) {
    MPoly::Exp e(nv, 0);
    e[pick(rng)] = 1;
    den = MPoly(nv);
    den.addTerm(e, Rat(1));
    if (rng() % 2) den.addTerm(MPoly::Exp(nv, 0), Rat(1));  // t or t+1
  }
  return RatFunc(std::move(num), std::move(den));
}

SuperElem randomElem(const RingPtr& ring, std::mt19937_64& rng,
                     const RandomElemOpts& opts) {
  std::uniform_int_distribution<int> nterms(1, opts.maxTerms);
  SuperElem acc = SuperElem::zero(ring);
  int T = nterms(rng);
  for (int t = 0; t < T; ++t) {
    TermKey key;
    key.exp.assign(ring->evenSlotCount(), 0);
    int oddCount = static_cast<int>(rng() % (opts.maxOddFactors + 1));
    for (int k = 0; k < oddCount && ring->oddSlotCount() > 0; ++k)
      key.odd |= uint64_t(1) << (rng() % ring->oddSlotCount());
    for (int s = 0; s < ring->evenSlotCount(); ++s)
      key.exp[s] = static_cast<uint16_t>(rng() % (opts.maxEvenGenDeg + 1));
    TermMap tm{{key, randomBodyScalar(ring, rng, opts)}};
    acc = acc + SuperElem::fromTerms(ring, std::move(tm));
  }
  return acc;
}

SuperElem randomHomogeneous(const RingPtr& ring, Parity p, std::mt19937_64& rng,
                            const RandomElemOpts& opts) {
  SuperElem e = randomElem(ring, rng, opts);
  SuperElem part = p == Parity::Even ? e.evenPart() : e.oddPart();
  if (!part.isZero()) return part;
  if (p == Parity::Even) return SuperElem::rational(ring, randomRat(rng, opts.coeffRange));
  // Odd fallback: a single odd generator when one exists.
  if (ring->oddSlotCount() == 0) return SuperElem::zero(ring);
  int slot = static_cast<int>(rng() % ring->oddSlotCount());
  return SuperElem::generator(ring, ring->genOfOddSlot(slot));
}

SuperMatrix randomClassifiedMatrix(const RingPtr& ring, int m, int n, MatClass cls,
                                   std::mt19937_64& rng, const RandomElemOpts& opts) {
  Parity p = cls == MatClass::Odd ? Parity::Odd : Parity::Even;
  SuperMatrix x(ring, m, n);
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j) {
      Parity want = x.slotParity(i) + x.slotParity(j) + p;
      x.at(i, j) = randomHomogeneous(ring, want, rng, opts);
    }
  return x;
}

SuperMatrix randomGlMatrix(const RingPtr& ring, int m, int n, std::mt19937_64& rng,
                           const RandomElemOpts& opts) {
  for (;;) {
    SuperMatrix x = randomClassifiedMatrix(ring, m, n, MatClass::Even, rng, opts);
    if (x.isGl()) return x;
    // Nudge toward invertibility instead of rejection-only sampling.
    SuperMatrix fixed = x + SuperMatrix::identity(ring, m, n);
    if (fixed.isGl()) return fixed;
  }
}

}  // namespace superpv
