#include "superpv/action.hpp"

#include <bit>
#include <sstream>

#include "superpv/errors.hpp"
#include "superpv/random_gen.hpp"

namespace superpv {

DAction::DAction(LiePtr lie, RingPtr ring) : lie_(std::move(lie)), ring_(std::move(ring)) {
  onVar_.assign(lie_->genCount(),
                std::vector<SuperElem>(ring_->bodyVarCount(), SuperElem::zero(ring_)));
  onGen_.assign(lie_->genCount(),
                std::vector<SuperElem>(ring_->genCount(), SuperElem::zero(ring_)));
}

void DAction::setOnBodyVar(int lieGen, int var, SuperElem value) {
  if (value.ring() != ring_) throw RingMismatchError("action value in wrong ring");
  if (!value.homogeneousOfParity(lie_->parity(lieGen)))
    throw ValidationError("action of " + lie_->gen(lieGen).name + " on body variable '" +
                          ring_->bodyVars()[var] + "' must have parity " +
                          to_string(lie_->parity(lieGen)));
  onVar_[lieGen][var] = std::move(value);
}

void DAction::setOnGen(int lieGen, int ringGen, SuperElem value) {
  if (value.ring() != ring_) throw RingMismatchError("action value in wrong ring");
  Parity want = lie_->parity(lieGen) + ring_->genParity(ringGen);
  if (!value.homogeneousOfParity(want))
    throw ValidationError("action of " + lie_->gen(lieGen).name + " on generator '" +
                          ring_->gen(ringGen).name + "' must have parity " + to_string(want));
  onGen_[lieGen][ringGen] = std::move(value);
}

const SuperElem& DAction::onBodyVar(int lieGen, int var) const { return onVar_[lieGen][var]; }
const SuperElem& DAction::onGen(int lieGen, int ringGen) const { return onGen_[lieGen][ringGen]; }

SuperElem DAction::applyGenerator(int lieGen, const SuperElem& a) const {
  if (a.ring() != ring_) throw RingMismatchError("apply: element in wrong ring");
  const RingSpec& ring = *ring_;
  bool dOdd = lie_->parity(lieGen) == Parity::Odd;
  std::vector<int32_t> K = a.denPow();
  SuperElem res = SuperElem::zero(ring_);

  auto monoElem = [&](uint64_t odd, const std::vector<uint16_t>& exp) {
    TermKey k{odd, exp};
    TermMap t{{k, RatFunc::constant(ring.bodyVarCount(), 1)}};
    return SuperElem::fromTerms(ring_, std::move(t));
  };
  std::vector<uint16_t> zeroExp(ring.evenSlotCount(), 0);

  for (auto& [key, c] : a.terms()) {
    // Chain rule through the body scalar.
    for (int v = 0; v < ring.bodyVarCount(); ++v) {
      const SuperElem& dv = onVar_[lieGen][v];
      if (dv.isZero()) continue;
      RatFunc dc = c.derivative(v);
      if (dc.isZero()) continue;
      res = res + (dv.scaled(dc) * monoElem(key.odd, key.exp)).withDenShift(K);
    }
    // Super-Leibniz across the even generators (no sign: even prefix).
    for (int s = 0; s < ring.evenSlotCount(); ++s) {
      if (key.exp[s] == 0) continue;
      const SuperElem& dg = onGen_[lieGen][ring.genOfEvenSlot(s)];
      if (dg.isZero()) continue;
      std::vector<uint16_t> exp = key.exp;
      exp[s] -= 1;
      SuperElem piece = monoElem(0, exp).scaled(c).scaledRat(Rat(key.exp[s])) * dg *
                        monoElem(key.odd, zeroExp);
      res = res + piece.withDenShift(K);
    }
    // Super-Leibniz across the odd generators; the sign counts the odd
    // factors jumped over.
    uint64_t mask = key.odd;
    int before = 0;
    while (mask) {
      int b = std::countr_zero(mask);
      mask &= mask - 1;
      const SuperElem& dg = onGen_[lieGen][ring.genOfOddSlot(b)];
      if (!dg.isZero()) {
        uint64_t low = key.odd & ((uint64_t(1) << b) - 1);
        uint64_t high = key.odd & ~((uint64_t(1) << (b + 1)) - 1);
        SuperElem piece = monoElem(low, key.exp).scaled(c) * dg * monoElem(high, zeroExp);
        if (dOdd && (before & 1)) piece = -piece;
        res = res + piece.withDenShift(K);
      }
      ++before;
    }
  }

  // Quotient rule on denominator powers: d(u_i) = -(d den_i) u_i^2.
  for (size_t i = 0; i < K.size(); ++i) {
    if (K[i] == 0) continue;
    SuperElem den = SuperElem::fromTerms(ring_, ring.dens()[i].terms);
    SuperElem dden = applyGenerator(lieGen, den);
    if (dden.isZero()) continue;
    std::vector<int32_t> shift(K.size(), 0);
    shift[i] = 1;
    SuperElem base = dOdd ? a.sigma() : a;
    res = res + (base * dden).scaledRat(Rat(-K[i])).withDenShift(shift);
  }
  return res;
}

SuperElem DAction::applySequence(const DWord::Mono& seq, SuperElem a) const {
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) a = applyGenerator(*it, a);
  return a;
}

SuperElem DAction::applyWord(const DWord& w, const SuperElem& a) const {
  SuperElem res = SuperElem::zero(ring_);
  for (auto& [mono, c] : w.terms()) res = res + applySequence(mono, a).scaledRat(c);
  return res;
}

CheckReport checkSuperLeibniz(const DAction& action, int samples, uint64_t seed) {
  std::mt19937_64 rng(seed);
  RandomElemOpts opts;
  for (int s = 0; s < samples; ++s) {
    Parity pa = (rng() & 1) ? Parity::Odd : Parity::Even;
    Parity pb = (rng() & 1) ? Parity::Odd : Parity::Even;
    SuperElem a = randomHomogeneous(action.ring(), pa, rng, opts);
    SuperElem b = randomHomogeneous(action.ring(), pb, rng, opts);
    for (int d = 0; d < action.lie()->genCount(); ++d) {
      SuperElem lhs = action.applyGenerator(d, a * b);
      SuperElem rhs = action.applyGenerator(d, a) * b;
      SuperElem tail = a * action.applyGenerator(d, b);
      bool flip = action.lie()->parity(d) == Parity::Odd && pa == Parity::Odd;
      rhs = flip ? rhs - tail : rhs + tail;
      if (lhs != rhs)
        return CheckReport::failed("super-Leibniz violated for " +
                                   action.lie()->gen(d).name + " on a = " + a.str() +
                                   ", b = " + b.str());
    }
  }
  return CheckReport::ok();
}

CheckReport checkBracketCompat(const DAction& action, const LieSpec& spec) {
  const RingPtr& ring = action.ring();
  std::vector<SuperElem> probes;
  for (int v = 0; v < ring->bodyVarCount(); ++v)
    probes.push_back(SuperElem::bodyVar(ring, v));
  for (int g = 0; g < ring->genCount(); ++g)
    probes.push_back(SuperElem::generator(ring, g));

  for (int i = 0; i < spec.genCount(); ++i) {
    for (int j = 0; j <= i; ++j) {
      GenCombo br = spec.bracket(i, j);
      bool bothOdd =
          spec.parity(i) == Parity::Odd && spec.parity(j) == Parity::Odd;
      for (auto& x : probes) {
        SuperElem lhs = SuperElem::zero(ring);
        for (auto& [g, c] : br) lhs = lhs + action.applyGenerator(g, x).scaledRat(c);
        SuperElem rhs = action.applyGenerator(i, action.applyGenerator(j, x));
        SuperElem tail = action.applyGenerator(j, action.applyGenerator(i, x));
        rhs = bothOdd ? rhs + tail : rhs - tail;
        if (lhs != rhs)
          return CheckReport::failed("bracket compatibility violated for [" +
                                     spec.gen(i).name + "," + spec.gen(j).name +
                                     "] on " + x.str());
      }
    }
  }
  return CheckReport::ok();
}

namespace {

// Flattens elements to exact rational coordinate columns. Coordinates are
// indexed by (denominator-aligned term key, body monomial) pairs after
// clearing each key row to a common polynomial denominator.
std::vector<std::vector<Rat>> rationalColumns(const std::vector<SuperElem>& elems) {
  size_t I = elems.size();
  std::vector<std::vector<Rat>> rows;
  if (I == 0) return rows;
  const RingPtr& ring = elems[0].ring();

  // Common denominator powers per slot.
  std::vector<int32_t> common(ring->denCount(), 0);
  for (auto& e : elems) {
    auto p = e.denPow();
    for (int i = 0; i < ring->denCount(); ++i) common[i] = std::max(common[i], p[i]);
  }
  std::vector<TermMap> maps;
  for (auto& e : elems) {
    std::vector<int32_t> shift = e.denPow();
    for (int i = 0; i < ring->denCount(); ++i) shift[i] = -(common[i] - shift[i]);
    // withDenShift with negative entries multiplies the numerator up.
    SuperElem lifted = e.withDenShift(shift);
    maps.push_back(lifted.terms());
  }

  std::map<TermKey, std::vector<RatFunc>> byKey;
  for (size_t i = 0; i < I; ++i)
    for (auto& [k, c] : maps[i]) {
      auto& row = byKey[k];
      row.resize(I, RatFunc(ring->bodyVarCount()));
      row[i] = c;
    }

  for (auto& [k, row] : byKey) {
    row.resize(I, RatFunc(ring->bodyVarCount()));
    MPoly common_den = MPoly::constant(ring->bodyVarCount(), 1);
    for (auto& f : row)
      if (!f.isZero() && !f.isPolynomial()) common_den = common_den * f.den();
    std::map<MPoly::Exp, std::vector<Rat>> byMono;
    for (size_t i = 0; i < I; ++i) {
      if (row[i].isZero()) continue;
      MPoly p = row[i].num() * *common_den.dividedBy(row[i].den());
      for (auto& [e, c] : p.terms()) {
        auto& r = byMono[e];
        r.resize(I, Rat(0));
        r[i] = c;
      }
    }
    for (auto& [e, r] : byMono) {
      auto rr = r;
      rr.resize(I, Rat(0));
      rows.push_back(rr);
    }
  }
  return rows;
}

// Kernel basis of the row system (rows . c = 0) by exact Gauss-Jordan; free
// variables in increasing index order give the canonical basis.
std::vector<std::vector<Rat>> kernelBasis(std::vector<std::vector<Rat>> rows, size_t I) {
  std::vector<int> pivotCol;
  size_t r = 0;
  for (size_t c = 0; c < I && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && is_zero(rows[p][c])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rat inv = 1 / rows[r][c];
    for (size_t j = 0; j < I; ++j) rows[r][j] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || is_zero(rows[i][c])) continue;
      Rat f = rows[i][c];
      for (size_t j = 0; j < I; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivotCol.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> isPivot(I, false);
  for (int c : pivotCol) isPivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (size_t c = 0; c < I; ++c) {
    if (isPivot[c]) continue;
    std::vector<Rat> v(I, Rat(0));
    v[c] = 1;
    for (size_t i = 0; i < pivotCol.size(); ++i) v[pivotCol[i]] = -rows[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<std::vector<Rat>> kernelOfElements(const std::vector<SuperElem>& span) {
  if (span.empty()) return {};
  return kernelBasis(rationalColumns(span), span.size());
}

std::vector<SuperElem> constants(const DAction& action, const std::vector<SuperElem>& span) {
  if (span.empty()) return {};
  for (auto& a : span)
    if (!a.parity()) throw ValidationError("constants: span elements must be homogeneous");
  std::vector<std::vector<Rat>> rows;
  for (int d = 0; d < action.lie()->genCount(); ++d) {
    std::vector<SuperElem> images;
    for (auto& a : span) images.push_back(action.applyGenerator(d, a));
    auto r = rationalColumns(images);
    rows.insert(rows.end(), r.begin(), r.end());
  }
  auto basis = kernelBasis(std::move(rows), span.size());
  std::vector<SuperElem> out;
  for (auto& v : basis) {
    SuperElem x = SuperElem::zero(span[0].ring());
    for (size_t i = 0; i < span.size(); ++i) x = x + span[i].scaledRat(v[i]);
    out.push_back(x);
  }
  return out;
}

}  // namespace superpv
