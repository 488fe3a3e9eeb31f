#include "superpv/boson.hpp"

#include <sstream>

namespace superpv {

BosonElem BosonElem::zero(LiePtr lie) {
  BosonElem x;
  x.lie_ = std::move(lie);
  return x;
}

BosonElem BosonElem::one(LiePtr lie) { return fromWord(std::move(lie), {}, 0); }

BosonElem BosonElem::sigma(LiePtr lie) { return fromWord(std::move(lie), {}, 1); }

BosonElem BosonElem::generator(LiePtr lie, int g) {
  return fromWord(std::move(lie), {g}, 0);
}

BosonElem BosonElem::fromWord(LiePtr lie, const DWord::Mono& seq, uint8_t sig,
                              const Rat& c) {
  BosonElem x = zero(std::move(lie));
  for (auto& [m, co] : DWord::normalizedTerms(*x.lie_, seq, c))
    x.addTerm({m, sig}, co);
  return x;
}

BosonElem BosonElem::fromDWord(const DWord& w) {
  BosonElem x = zero(w.lie());
  for (auto& [m, c] : w.terms()) x.addTerm({m, 0}, c);
  return x;
}

void BosonElem::addTerm(const BKey& k, const Rat& c) {
  if (is_zero(c)) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_[k] = c;
  } else {
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

BosonElem BosonElem::operator-() const { return scaled(Rat(-1)); }

BosonElem BosonElem::scaled(const Rat& c) const {
  BosonElem x = zero(lie_);
  if (is_zero(c)) return x;
  for (auto& [k, co] : terms_) x.terms_[k] = co * c;
  return x;
}

BosonElem BosonElem::operator+(const BosonElem& o) const {
  BosonElem x = *this;
  for (auto& [k, c] : o.terms_) x.addTerm(k, c);
  return x;
}

BosonElem BosonElem::operator-(const BosonElem& o) const { return *this + (-o); }

BosonElem BosonElem::operator*(const BosonElem& o) const {
  BosonElem x = zero(lie_);
  for (auto& [ka, ca] : terms_)
    for (auto& [kb, cb] : o.terms_) {
      // (w1 s^e1)(w2 s^e2) = (-1)^{e1 |w2|} (w1 w2) s^{e1+e2}
      Rat c = ca * cb;
      if (ka.sig && DWord::monoParity(*lie_, kb.word) == Parity::Odd) c = -c;
      DWord::Mono seq = ka.word;
      seq.insert(seq.end(), kb.word.begin(), kb.word.end());
      uint8_t sig = ka.sig ^ kb.sig;
      for (auto& [m, co] : DWord::normalizedTerms(*lie_, seq, c)) x.addTerm({m, sig}, co);
    }
  return x;
}

Rat BosonElem::counit() const {
  Rat r(0);
  for (auto& [k, c] : terms_)
    if (k.word.empty()) r += c;
  return r;
}

std::string BosonElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& [k, c] : terms_) {
    Rat a = abs(c);
    if (first)
      out << (sgn(c) < 0 ? "-" : "");
    else
      out << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    std::ostringstream w;
    for (size_t i = 0; i < k.word.size(); ++i) {
      if (i) w << "*";
      w << lie_->gen(k.word[i]).name;
    }
    if (k.sig) {
      if (!k.word.empty()) w << "*";
      w << "sigma";
    }
    std::string ws = w.str();
    if (ws.empty()) {
      out << to_string(a);
    } else {
      if (a != 1) out << to_string(a) << "*";
      out << ws;
    }
  }
  return out.str();
}

BosonTensor deltaB(const BosonElem& x) {
  const LieSpec& lie = *x.lie();
  BosonTensor out;
  for (auto& [key, coeff] : x.terms()) {
    // Raw accumulation over the word, then PBW-normalize both components.
    std::map<std::pair<BosonElem::BKey, BosonElem::BKey>, Rat> acc{
        {{{{}, 0}, {{}, 0}}, coeff}};
    for (int g : key.word) {
      bool gOdd = lie.parity(g) == Parity::Odd;
      std::map<std::pair<BosonElem::BKey, BosonElem::BKey>, Rat> next;
      for (auto& [pr, c] : acc) {
        // (a ⊗ b)(g ⊗ 1): sigma of a hops over g.
        {
          auto a = pr.first;
          Rat s = c;
          if (a.sig && gOdd) s = -s;
          a.word.push_back(g);
          auto k = std::make_pair(a, pr.second);
          next[k] += s;
          if (is_zero(next[k])) next.erase(k);
        }
        // (a ⊗ b)(sigma^{|g|} ⊗ g): b's sigma hops over g.
        {
          auto a = pr.first;
          auto b = pr.second;
          if (gOdd) a.sig ^= 1;
          Rat s = c;
          if (b.sig && gOdd) s = -s;
          b.word.push_back(g);
          auto k = std::make_pair(a, b);
          next[k] += s;
          if (is_zero(next[k])) next.erase(k);
        }
      }
      acc = std::move(next);
    }
    if (key.sig) {
      // Multiply by sigma ⊗ sigma on the right: no signs, sigma lands right.
      std::map<std::pair<BosonElem::BKey, BosonElem::BKey>, Rat> next;
      for (auto& [pr, c] : acc) {
        auto k = pr;
        k.first.sig ^= 1;
        k.second.sig ^= 1;
        next[k] = c;
      }
      acc = std::move(next);
    }
    for (auto& [pr, c] : acc) {
      auto left = DWord::normalizedTerms(lie, pr.first.word);
      auto right = DWord::normalizedTerms(lie, pr.second.word);
      for (auto& [ml, cl] : left)
        for (auto& [mr, cr] : right) {
          auto k = std::make_pair(BosonElem::BKey{ml, pr.first.sig},
                                  BosonElem::BKey{mr, pr.second.sig});
          out[k] += c * cl * cr;
          if (is_zero(out[k])) out.erase(k);
        }
    }
  }
  return out;
}

namespace {

// S^b(g) = -sigma^{|g|} g = -(-1)^{|g|} g sigma^{|g|} in canonical form.
BosonElem sbGen(const LiePtr& lie, int g) {
  bool odd = lie->parity(g) == Parity::Odd;
  return BosonElem::fromWord(lie, {g}, odd ? 1 : 0, odd ? Rat(1) : Rat(-1));
}

// S^b^{-1}(g) = -g sigma^{|g|}.
BosonElem sbinvGen(const LiePtr& lie, int g) {
  bool odd = lie->parity(g) == Parity::Odd;
  return BosonElem::fromWord(lie, {g}, odd ? 1 : 0, Rat(-1));
}

}  // namespace

BosonElem sB(const BosonElem& x) {
  const LiePtr& lie = x.lie();
  BosonElem out = BosonElem::zero(lie);
  for (auto& [key, c] : x.terms()) {
    // Anti-multiplicative: S^b(w s^e) = s^e S^b(g_s)...S^b(g_1).
    BosonElem acc = BosonElem::fromWord(lie, {}, key.sig, c);
    for (auto it = key.word.rbegin(); it != key.word.rend(); ++it)
      acc = acc * sbGen(lie, *it);
    out = out + acc;
  }
  return out;
}

BosonElem sBinv(const BosonElem& x) {
  const LiePtr& lie = x.lie();
  BosonElem out = BosonElem::zero(lie);
  for (auto& [key, c] : x.terms()) {
    BosonElem acc = BosonElem::fromWord(lie, {}, key.sig, c);
    for (auto it = key.word.rbegin(); it != key.word.rend(); ++it)
      acc = acc * sbinvGen(lie, *it);
    out = out + acc;
  }
  return out;
}

std::string tensorStr(const LieSpec& lie, const BosonTensor& t) {
  if (t.empty()) return "0";
  auto keyStr = [&](const BosonElem::BKey& k) {
    std::ostringstream w;
    for (size_t i = 0; i < k.word.size(); ++i) {
      if (i) w << "*";
      w << lie.gen(k.word[i]).name;
    }
    if (k.sig) {
      if (!k.word.empty()) w << "*";
      w << "sigma";
    }
    if (k.word.empty() && !k.sig) return std::string("1");
    return w.str();
  };
  std::ostringstream out;
  bool first = true;
  for (auto& [pr, c] : t) {
    Rat a = abs(c);
    if (first)
      out << (sgn(c) < 0 ? "-" : "");
    else
      out << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (a != 1) out << to_string(a) << "*";
    out << keyStr(pr.first) << "\xE2\x8A\x97" << keyStr(pr.second);
  }
  return out.str();
}

CheckReport checkAntipodeIdentities(const LiePtr& lie, int bound) {
  for (auto& mono : enumeratePbwMonos(*lie, bound)) {
    BosonElem w = BosonElem::fromWord(lie, mono);
    Rat eps = w.counit();
    BosonElem lhs = BosonElem::zero(lie);
    BosonElem rhs = BosonElem::zero(lie);
    for (auto& [pr, c] : deltaB(w)) {
      BosonElem a = BosonElem::fromWord(lie, pr.first.word, pr.first.sig);
      BosonElem b = BosonElem::fromWord(lie, pr.second.word, pr.second.sig);
      lhs = lhs + (b * sBinv(a)).scaled(c);
      rhs = rhs + (a * sB(b)).scaled(c);
    }
    BosonElem expect = BosonElem::one(lie).scaled(eps);
    if (lhs != expect)
      return CheckReport::failed("d_[2] S^b^{-1}(d_[1]) != eps(d) on word " +
                                 BosonElem::fromWord(lie, mono).str());
    if (rhs != expect)
      return CheckReport::failed("d_[1] S^b(d_[2]) != eps(d) on word " +
                                 BosonElem::fromWord(lie, mono).str());
  }
  return CheckReport::ok();
}

CheckReport checkCoassociativity(const LiePtr& lie, int bound) {
  using Triple = std::tuple<BosonElem::BKey, BosonElem::BKey, BosonElem::BKey>;
  for (auto& mono : enumeratePbwMonos(*lie, bound)) {
    BosonElem w = BosonElem::fromWord(lie, mono);
    std::map<Triple, Rat> left, right;
    for (auto& [pr, c] : deltaB(w)) {
      for (auto& [pr2, c2] : deltaB(BosonElem::fromWord(lie, pr.first.word, pr.first.sig))) {
        Triple key{pr2.first, pr2.second, pr.second};
        left[key] += c * c2;
        if (is_zero(left[key])) left.erase(key);
      }
      for (auto& [pr2, c2] :
           deltaB(BosonElem::fromWord(lie, pr.second.word, pr.second.sig))) {
        Triple key{pr.first, pr2.first, pr2.second};
        right[key] += c * c2;
        if (is_zero(right[key])) right.erase(key);
      }
    }
    if (left != right)
      return CheckReport::failed("coassociativity fails on word " + w.str());
  }
  return CheckReport::ok();
}

CheckReport checkAntipodeAlgebra(const LiePtr& lie, int bound) {
  auto monos = enumeratePbwMonos(*lie, bound);
  for (auto& m : monos) {
    BosonElem w = BosonElem::fromWord(lie, m);
    if (sBinv(sB(w)) != w)
      return CheckReport::failed("S^b^{-1} . S^b != id on word " + w.str());
    if (sB(sBinv(w)) != w)
      return CheckReport::failed("S^b . S^b^{-1} != id on word " + w.str());
  }
  for (auto& m1 : monos)
    for (auto& m2 : monos) {
      if (m1.size() + m2.size() > static_cast<size_t>(bound)) continue;
      BosonElem a = BosonElem::fromWord(lie, m1);
      BosonElem b = BosonElem::fromWord(lie, m2);
      if (sB(a * b) != sB(b) * sB(a))
        return CheckReport::failed("S^b is not anti-multiplicative on " + a.str() +
                                   ", " + b.str());
    }
  return CheckReport::ok();
}

}  // namespace superpv
