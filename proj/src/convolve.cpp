#include "superpv/convolve.hpp"

#include "superpv/errors.hpp"

namespace superpv {

DFunctional::DFunctional(LiePtr lie, RingPtr ring, Parity parity)
    : lie_(std::move(lie)), ring_(std::move(ring)), parity_(parity) {}

void DFunctional::set(const DWord::Mono& mono, SuperElem value) {
  if (!DWord::isNormal(*lie_, mono))
    throw ValidationError("functional support must be PBW-normal");
  Parity want = parity_ + DWord::monoParity(*lie_, mono);
  if (!value.homogeneousOfParity(want))
    throw ValidationError("functional value parity mismatch");
  if (value.isZero())
    vals_.erase(mono);
  else
    vals_[mono] = std::move(value);
}

SuperElem DFunctional::value(const DWord::Mono& mono) const {
  auto it = vals_.find(mono);
  return it == vals_.end() ? SuperElem::zero(ring_) : it->second;
}

bool DFunctional::operator==(const DFunctional& o) const {
  if (lie_ != o.lie_ || ring_ != o.ring_) return false;
  // Compare as functions; parities of identical functions may differ only on
  // the zero functional.
  for (auto& [m, v] : vals_)
    if (o.value(m) != v) return false;
  for (auto& [m, v] : o.vals_)
    if (value(m) != v) return false;
  return true;
}

std::map<std::pair<DWord::Mono, DWord::Mono>, Rat> superCoproduct(
    const LieSpec& lie, const DWord::Mono& mono) {
  // Raw tensor accumulation; components normalized at the end.
  std::map<std::pair<DWord::Mono, DWord::Mono>, Rat> acc{{{{}, {}}, Rat(1)}};
  for (int g : mono) {
    std::map<std::pair<DWord::Mono, DWord::Mono>, Rat> next;
    bool gOdd = lie.parity(g) == Parity::Odd;
    for (auto& [pair, c] : acc) {
      // (a ⊗ b)(g ⊗ 1) = (-1)^{|b||g|} ag ⊗ b
      {
        DWord::Mono a = pair.first;
        a.push_back(g);
        Rat s = c;
        if (gOdd && DWord::monoParity(lie, pair.second) == Parity::Odd) s = -s;
        auto key = std::make_pair(a, pair.second);
        next[key] += s;
        if (is_zero(next[key])) next.erase(key);
      }
      // (a ⊗ b)(1 ⊗ g) = a ⊗ bg
      {
        DWord::Mono b = pair.second;
        b.push_back(g);
        auto key = std::make_pair(pair.first, b);
        next[key] += c;
        if (is_zero(next[key])) next.erase(key);
      }
    }
    acc = std::move(next);
  }
  // Normalize both components to the PBW basis.
  std::map<std::pair<DWord::Mono, DWord::Mono>, Rat> out;
  for (auto& [pair, c] : acc) {
    auto left = DWord::normalizedTerms(lie, pair.first);
    auto right = DWord::normalizedTerms(lie, pair.second);
    for (auto& [ml, cl] : left)
      for (auto& [mr, cr] : right) {
        auto key = std::make_pair(ml, mr);
        out[key] += c * cl * cr;
        if (is_zero(out[key])) out.erase(key);
      }
  }
  return out;
}

DFunctional convolve(const DFunctional& f, const DFunctional& g, int bound) {
  if (f.lie() != g.lie() || f.ring() != g.ring())
    throw ValidationError("convolve: functionals over different structures");
  DFunctional out(f.lie(), f.ring(), f.parity() + g.parity());
  bool fOdd = f.parity() == Parity::Odd;
  for (auto& mono : enumeratePbwMonos(*f.lie(), bound)) {
    SuperElem acc = SuperElem::zero(f.ring());
    for (auto& [pair, c] : superCoproduct(*f.lie(), mono)) {
      SuperElem fv = f.value(pair.first);
      if (fv.isZero()) continue;
      SuperElem gv = g.value(pair.second);
      if (gv.isZero()) continue;
      Rat s = c;
      if (fOdd && DWord::monoParity(*f.lie(), pair.second) == Parity::Odd) s = -s;
      acc = acc + (fv * gv).scaledRat(s);
    }
    out.set(mono, acc);
  }
  return out;
}

DFunctional counitFunctional(LiePtr lie, RingPtr ring) {
  DFunctional e(std::move(lie), std::move(ring), Parity::Even);
  e.set({}, SuperElem::one(e.ring()));
  return e;
}

DFunctional muFunctional(const DAction& action, const SuperElem& a,
                         const SuperElem& aPrime, int bound) {
  auto pa = a.parity();
  auto pb = aPrime.parity();
  if (!pa || !pb) throw ValidationError("muFunctional: arguments must be homogeneous");
  DFunctional out(action.lie(), action.ring(), *pa + *pb);
  for (auto& mono : enumeratePbwMonos(*action.lie(), bound))
    out.set(mono, action.applySequence(mono, a) * aPrime);
  return out;
}

}  // namespace superpv
