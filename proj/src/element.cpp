#include "superpv/element.hpp"

#include <bit>

#include "superpv/errors.hpp"
#include "superpv/expr_io.hpp"

namespace superpv {

namespace {

// Sign of merging two ascending odd-generator products: (-1)^inversions.
// Returns false when the masks overlap (a squared odd generator kills the
// term).
bool mergeOddMasks(uint64_t a, uint64_t b, uint64_t& mask, int& sign) {
  if (a & b) return false;
  int inv = 0;
  uint64_t bb = b;
  while (bb) {
    int j = std::countr_zero(bb);
    bb &= bb - 1;
    if (j < 63) inv += std::popcount(a >> (j + 1));
  }
  mask = a | b;
  sign = (inv & 1) ? -1 : 1;
  return true;
}

TermMap denTermPow(const RingSpec& ring, int slot, int32_t k) {
  TermKey unitKey;
  unitKey.exp.assign(ring.evenSlotCount(), 0);
  TermMap acc{{unitKey, RatFunc::constant(ring.bodyVarCount(), 1)}};
  for (int32_t i = 0; i < k; ++i) acc = termMapMul(ring, acc, ring.dens()[slot].terms);
  return acc;
}

}  // namespace

TermMap termMapMul(const RingSpec& ring, const TermMap& a, const TermMap& b) {
  TermMap out;
  TermKey key;
  key.exp.resize(ring.evenSlotCount());
  for (auto& [ka, ca] : a) {
    for (auto& [kb, cb] : b) {
      int sign;
      if (!mergeOddMasks(ka.odd, kb.odd, key.odd, sign)) continue;
      for (int i = 0; i < ring.evenSlotCount(); ++i)
        key.exp[i] = static_cast<uint16_t>(ka.exp[i] + kb.exp[i]);
      RatFunc c = ca * cb;
      if (sign < 0) c = -c;
      auto it = out.find(key);
      if (it == out.end()) {
        if (!c.isZero()) out.emplace(key, std::move(c));
      } else {
        it->second = it->second + c;
        if (it->second.isZero()) out.erase(it);
      }
    }
  }
  return out;
}

std::optional<TermMap> termMapDividedBy(const TermMap& a, const TermMap& divisor) {
  if (divisor.empty()) return std::nullopt;
  for (auto& [k, c] : divisor)
    if (k.odd != 0) return std::nullopt;

  // Split dividend by odd mask; each purely even component must be divisible.
  std::map<uint64_t, std::map<std::vector<uint16_t>, RatFunc>> groups;
  for (auto& [k, c] : a) groups[k.odd][k.exp] = c;

  const auto& dLeadKey = divisor.rbegin()->first.exp;
  const RatFunc& dLeadCoeff = divisor.rbegin()->second;

  TermMap quotient;
  for (auto& [mask, poly] : groups) {
    std::map<std::vector<uint16_t>, RatFunc> rem = poly;
    while (!rem.empty()) {
      const auto& [rExp, rCoeff] = *rem.rbegin();
      std::vector<uint16_t> q(rExp.size());
      for (size_t i = 0; i < rExp.size(); ++i) {
        if (rExp[i] < dLeadKey[i]) return std::nullopt;
        q[i] = static_cast<uint16_t>(rExp[i] - dLeadKey[i]);
      }
      RatFunc qc = rCoeff / dLeadCoeff;
      for (auto& [dExp, dCoeff] : divisor) {
        std::vector<uint16_t> e(q.size());
        for (size_t i = 0; i < q.size(); ++i)
          e[i] = static_cast<uint16_t>(q[i] + dExp.exp[i]);
        auto it = rem.find(e);
        RatFunc delta = qc * dCoeff;
        if (it == rem.end()) {
          if (!delta.isZero()) rem.emplace(e, -delta);
        } else {
          it->second = it->second - delta;
          if (it->second.isZero()) rem.erase(it);
        }
      }
      TermKey qKey{mask, q};
      auto qit = quotient.find(qKey);
      if (qit == quotient.end())
        quotient.emplace(qKey, qc);
      else
        qit->second = qit->second + qc;
    }
  }
  return quotient;
}

SuperElem SuperElem::zero(RingPtr ring) {
  SuperElem e;
  e.ring_ = std::move(ring);
  e.denPow_.assign(e.ring_->denCount(), 0);
  return e;
}

SuperElem SuperElem::one(RingPtr ring) { return rational(std::move(ring), Rat(1)); }

SuperElem SuperElem::rational(RingPtr ring, const Rat& c) {
  int nv = ring->bodyVarCount();
  return scalar(std::move(ring), RatFunc::constant(nv, c));
}

SuperElem SuperElem::scalar(RingPtr ring, const RatFunc& c) {
  SuperElem e = zero(std::move(ring));
  if (!c.isZero()) {
    TermKey key;
    key.exp.assign(e.ring_->evenSlotCount(), 0);
    e.terms_.emplace(std::move(key), c);
  }
  return e;
}

SuperElem SuperElem::generator(RingPtr ring, int genIdx) {
  SuperElem e = zero(std::move(ring));
  TermKey key;
  key.exp.assign(e.ring_->evenSlotCount(), 0);
  int slot = e.ring_->slotOfGen(genIdx);
  if (e.ring_->genParity(genIdx) == Parity::Odd)
    key.odd = uint64_t(1) << slot;
  else
    key.exp[slot] = 1;
  e.terms_.emplace(std::move(key), RatFunc::constant(e.ring_->bodyVarCount(), 1));
  return e;
}

SuperElem SuperElem::bodyVar(RingPtr ring, int varIdx) {
  int nv = ring->bodyVarCount();
  return scalar(std::move(ring), RatFunc::variable(nv, varIdx));
}

SuperElem SuperElem::fromTerms(RingPtr ring, TermMap terms, std::vector<int32_t> denPow) {
  SuperElem e;
  e.ring_ = std::move(ring);
  e.terms_ = std::move(terms);
  e.denPow_ = std::move(denPow);
  if (e.denPow_.size() > static_cast<size_t>(e.ring_->denCount()))
    throw std::logic_error("SuperElem: denominator power vector size mismatch");
  e.denPow_.resize(e.ring_->denCount(), 0);
  e.normalize();
  return e;
}

void SuperElem::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.isZero())
      it = terms_.erase(it);
    else
      ++it;
  }
  if (terms_.empty()) denPow_.assign(ring_ ? ring_->denCount() : 0, 0);
}

std::vector<int32_t> SuperElem::denPow() const {
  std::vector<int32_t> p = denPow_;
  if (ring_) p.resize(ring_->denCount(), 0);
  return p;
}

std::optional<Parity> SuperElem::parity() const {
  if (terms_.empty()) return Parity::Even;
  std::optional<Parity> p;
  for (auto& [k, c] : terms_) {
    Parity tp = (std::popcount(k.odd) & 1) ? Parity::Odd : Parity::Even;
    if (!p)
      p = tp;
    else if (*p != tp)
      return std::nullopt;
  }
  return p;
}

bool SuperElem::homogeneousOfParity(Parity p) const {
  if (terms_.empty()) return true;
  auto q = parity();
  return q && *q == p;
}

void checkSameRing(const SuperElem& a, const SuperElem& b, const char* where) {
  if (a.ring() != b.ring())
    throw RingMismatchError(std::string(where) + ": elements from different rings");
}

SuperElem SuperElem::operator-() const {
  SuperElem r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

namespace {

// Clears two elements to a common denominator power per slot.
void alignDen(const SuperElem& a, const SuperElem& b, const RingSpec& ring,
              TermMap& ta, TermMap& tb, std::vector<int32_t>& common) {
  common.resize(ring.denCount());
  ta = a.terms();
  tb = b.terms();
  std::vector<int32_t> pa = a.denPow(), pb = b.denPow();
  for (int i = 0; i < ring.denCount(); ++i) {
    common[i] = std::max(pa[i], pb[i]);
    if (pa[i] < common[i]) ta = termMapMul(ring, ta, denTermPow(ring, i, common[i] - pa[i]));
    if (pb[i] < common[i]) tb = termMapMul(ring, tb, denTermPow(ring, i, common[i] - pb[i]));
  }
}

}  // namespace

SuperElem SuperElem::operator+(const SuperElem& o) const {
  checkSameRing(*this, o, "add");
  TermMap ta, tb;
  std::vector<int32_t> common;
  alignDen(*this, o, *ring_, ta, tb, common);
  for (auto& [k, c] : tb) {
    auto it = ta.find(k);
    if (it == ta.end()) {
      ta.emplace(k, c);
    } else {
      it->second = it->second + c;
      if (it->second.isZero()) ta.erase(it);
    }
  }
  return fromTerms(ring_, std::move(ta), std::move(common));
}

SuperElem SuperElem::operator-(const SuperElem& o) const { return *this + (-o); }

SuperElem SuperElem::operator*(const SuperElem& o) const {
  checkSameRing(*this, o, "mul");
  std::vector<int32_t> denPow = this->denPow();
  std::vector<int32_t> dpo = o.denPow();
  for (int i = 0; i < ring_->denCount(); ++i) denPow[i] += dpo[i];
  return fromTerms(ring_, termMapMul(*ring_, terms_, o.terms_), std::move(denPow));
}

SuperElem SuperElem::scaled(const RatFunc& c) const {
  SuperElem r = *this;
  if (c.isZero()) return zero(ring_);
  for (auto& [k, t] : r.terms_) t = t * c;
  return r;
}

SuperElem SuperElem::scaledRat(const Rat& c) const {
  return scaled(RatFunc::constant(ring_->bodyVarCount(), c));
}

SuperElem SuperElem::pow(uint32_t k) const {
  SuperElem r = one(ring_);
  for (uint32_t i = 0; i < k; ++i) r = r * (*this);
  return r;
}

bool SuperElem::operator==(const SuperElem& o) const {
  if (ring_ != o.ring_) return false;
  if (denPow() == o.denPow()) return terms_ == o.terms_;
  TermMap ta, tb;
  std::vector<int32_t> common;
  alignDen(*this, o, *ring_, ta, tb, common);
  return ta == tb;
}

SuperElem SuperElem::body() const {
  SuperElem r = *this;
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    if (it->first.odd != 0)
      it = r.terms_.erase(it);
    else
      ++it;
  }
  r.normalize();
  return r;
}

SuperElem SuperElem::evenPart() const {
  SuperElem r = *this;
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    if (std::popcount(it->first.odd) & 1)
      it = r.terms_.erase(it);
    else
      ++it;
  }
  r.normalize();
  return r;
}

SuperElem SuperElem::oddPart() const {
  SuperElem r = *this;
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    if (std::popcount(it->first.odd) & 1)
      ++it;
    else
      it = r.terms_.erase(it);
  }
  r.normalize();
  return r;
}

SuperElem SuperElem::sigma() const {
  SuperElem r = *this;
  for (auto& [k, c] : r.terms_)
    if (std::popcount(k.odd) & 1) c = -c;
  return r;
}

namespace {

// Inverse of a nonzero purely even, soul-free element in the localized body
// ring: a scalar inverse when no even generators occur, otherwise a cofactor
// q with q*m = den^s found by exact division against rising denominator
// powers.
SuperElem bodyInverseOf(const SuperElem& m) {
  const RingPtr& ring = m.ring();
  if (m.isZero())
    throw BodyNotInvertibleError("inverse of an element with zero body");
  bool usesGens = false;
  uint32_t deg = 0;
  for (auto& [k, c] : m.terms()) {
    uint32_t d = 0;
    for (uint16_t e : k.exp) d += e;
    deg = std::max(deg, d);
    if (d > 0) usesGens = true;
  }
  if (!usesGens) {
    const RatFunc& c = m.terms().begin()->second;
    return SuperElem::scalar(ring, c.inverse());
  }
  for (int slot = 0; slot < ring->denCount(); ++slot) {
    TermKey unitKey;
    unitKey.exp.assign(ring->evenSlotCount(), 0);
    TermMap acc{{unitKey, RatFunc::constant(ring->bodyVarCount(), 1)}};
    for (uint32_t s = 1; s <= deg; ++s) {
      acc = termMapMul(*ring, acc, ring->dens()[slot].terms);
      if (auto q = termMapDividedBy(acc, m.terms())) {
        std::vector<int32_t> denPow(ring->denCount(), 0);
        denPow[slot] = static_cast<int32_t>(s);
        return SuperElem::fromTerms(ring, std::move(*q), std::move(denPow));
      }
    }
  }
  if (ring->denCount() > 1) {
    TermKey unitKey;
    unitKey.exp.assign(ring->evenSlotCount(), 0);
    TermMap all{{unitKey, RatFunc::constant(ring->bodyVarCount(), 1)}};
    for (int slot = 0; slot < ring->denCount(); ++slot)
      all = termMapMul(*ring, all, ring->dens()[slot].terms);
    TermMap acc = all;
    for (uint32_t s = 1; s <= deg; ++s) {
      if (auto q = termMapDividedBy(acc, m.terms())) {
        std::vector<int32_t> denPow(ring->denCount(), static_cast<int32_t>(s));
        return SuperElem::fromTerms(ring, std::move(*q), std::move(denPow));
      }
      acc = termMapMul(*ring, acc, all);
    }
  }
  throw BodyNotInvertibleError("body does not divide any denominator power");
}

}  // namespace

SuperElem SuperElem::invert() const {
  if (!homogeneousOfParity(Parity::Even))
    throw NotEvenError("invert: element is not even");
  SuperElem n = fromTerms(ring_, terms_);  // numerator, denominators cleared
  SuperElem b = n.body();
  SuperElem binv = bodyInverseOf(b);
  SuperElem soul = n - b;
  SuperElem result = binv;
  if (!soul.isZero()) {
    SuperElem factor = -(soul * binv);
    SuperElem cur = binv * factor;
    while (!cur.isZero()) {
      result = result + cur;
      cur = cur * factor;
    }
  }
  // (n / den^k)^{-1} = n^{-1} * den^k
  std::vector<int32_t> shift = denPow();
  for (auto& s : shift) s = -s;
  return result.withDenShift(shift);
}

SuperElem SuperElem::withDenShift(const std::vector<int32_t>& k) const {
  TermMap t = terms_;
  std::vector<int32_t> pow = denPow();
  for (size_t i = 0; i < pow.size(); ++i) {
    pow[i] += k[i];
    if (pow[i] < 0) {
      t = termMapMul(*ring_, t, denTermPow(*ring_, static_cast<int>(i), -pow[i]));
      pow[i] = 0;
    }
  }
  return fromTerms(ring_, std::move(t), std::move(pow));
}

SuperElem SuperElem::reduceDenominators() const {
  TermMap t = terms_;
  std::vector<int32_t> pow = denPow();
  for (size_t i = 0; i < pow.size(); ++i) {
    while (pow[i] > 0) {
      auto q = termMapDividedBy(t, ring_->dens()[i].terms);
      if (!q) break;
      t = std::move(*q);
      pow[i] -= 1;
    }
  }
  return fromTerms(ring_, std::move(t), std::move(pow));
}

std::string SuperElem::str() const { return elementToString(*this); }

SuperElem liftElement(const SuperElem& a, const RingPtr& target) {
  const RingSpec& src = *a.ring();
  // Name resolution is lazy: only variables, generators and denominators that
  // actually occur must exist in the target, so this also restricts elements
  // onto subrings.
  auto varMap = [&](int v) {
    auto tv = target->findBodyVar(src.bodyVars()[v]);
    if (!tv) throw ValidationError("lift: body variable '" + src.bodyVars()[v] +
                                   "' missing in target ring");
    return *tv;
  };
  auto genMap = [&](int g) {
    auto tg = target->findGen(src.gen(g).name);
    if (!tg || target->genParity(*tg) != src.genParity(g))
      throw ValidationError("lift: generator '" + src.gen(g).name +
                            "' missing or parity mismatch in target ring");
    return *tg;
  };
  auto denMap = [&](int d) {
    auto td = target->findDen(src.dens()[d].name);
    if (!td) throw ValidationError("lift: denominator '" + src.dens()[d].name +
                                   "' missing in target ring");
    return *td;
  };

  auto liftRatFunc = [&](const RatFunc& c) {
    auto liftPoly = [&](const MPoly& p) {
      MPoly out(target->bodyVarCount());
      for (auto& [e, coef] : p.terms()) {
        MPoly::Exp e2(target->bodyVarCount(), 0);
        for (int v = 0; v < src.bodyVarCount(); ++v)
          if (e[v] != 0) e2[varMap(v)] = e[v];
        out.addTerm(e2, coef);
      }
      return out;
    };
    return RatFunc(liftPoly(c.num()), liftPoly(c.den()));
  };

  TermMap out;
  for (auto& [k, c] : a.terms()) {
    TermKey key;
    key.exp.assign(target->evenSlotCount(), 0);
    // Odd slots of distinct generators map to distinct slots; resorting picks
    // up the Koszul sign.
    std::vector<int> slots;
    uint64_t mask = k.odd;
    while (mask) {
      int s = std::countr_zero(mask);
      mask &= mask - 1;
      slots.push_back(target->slotOfGen(genMap(src.genOfOddSlot(s))));
    }
    int inv = 0;
    for (size_t i = 0; i < slots.size(); ++i)
      for (size_t j = i + 1; j < slots.size(); ++j)
        if (slots[i] > slots[j]) ++inv;
    for (int s : slots) key.odd |= uint64_t(1) << s;
    for (int s = 0; s < src.evenSlotCount(); ++s) {
      if (k.exp[s] == 0) continue;
      key.exp[target->slotOfGen(genMap(src.genOfEvenSlot(s)))] = k.exp[s];
    }
    RatFunc c2 = liftRatFunc(c);
    if (inv & 1) c2 = -c2;
    auto it = out.find(key);
    if (it == out.end())
      out.emplace(std::move(key), std::move(c2));
    else
      it->second = it->second + c2;
  }
  std::vector<int32_t> denPow(target->denCount(), 0);
  std::vector<int32_t> srcPow = a.denPow();
  for (int d = 0; d < src.denCount(); ++d)
    if (srcPow[d] != 0) denPow[denMap(d)] += srcPow[d];
  return SuperElem::fromTerms(target, std::move(out), std::move(denPow));
}

SuperElem substituteOddZero(const SuperElem& a, const RingPtr& evenTarget) {
  return liftElement(a.body(), evenTarget);
}

SuperElem permuteGenerators(const SuperElem& a, const std::vector<int>& genPerm,
                            const std::vector<int>& denPerm) {
  const RingPtr& ring = a.ring();
  TermMap out;
  for (auto& [k, c] : a.terms()) {
    TermKey key;
    key.exp.assign(ring->evenSlotCount(), 0);
    std::vector<int> slots;
    uint64_t mask = k.odd;
    while (mask) {
      int s = std::countr_zero(mask);
      mask &= mask - 1;
      slots.push_back(ring->slotOfGen(genPerm[ring->genOfOddSlot(s)]));
    }
    int inv = 0;
    for (size_t i = 0; i < slots.size(); ++i)
      for (size_t j = i + 1; j < slots.size(); ++j)
        if (slots[i] > slots[j]) ++inv;
    for (int s : slots) key.odd |= uint64_t(1) << s;
    for (int s = 0; s < ring->evenSlotCount(); ++s) {
      if (k.exp[s] == 0) continue;
      key.exp[ring->slotOfGen(genPerm[ring->genOfEvenSlot(s)])] = k.exp[s];
    }
    RatFunc c2 = (inv & 1) ? -c : c;
    auto it = out.find(key);
    if (it == out.end())
      out.emplace(std::move(key), std::move(c2));
    else
      it->second = it->second + c2;
  }
  std::vector<int32_t> denPow(ring->denCount(), 0);
  std::vector<int32_t> srcPow = a.denPow();
  for (int d = 0; d < ring->denCount(); ++d) denPow[denPerm[d]] = srcPow[d];
  return SuperElem::fromTerms(ring, std::move(out), std::move(denPow));
}

}  // namespace superpv
