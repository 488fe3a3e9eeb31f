#include "superpv/dword.hpp"

#include <sstream>

namespace superpv {

DWord DWord::zero(LiePtr lie) {
  DWord w;
  w.lie_ = std::move(lie);
  return w;
}

DWord DWord::one(LiePtr lie) {
  DWord w = zero(std::move(lie));
  w.terms_[{}] = 1;
  return w;
}

DWord DWord::generator(LiePtr lie, int g) {
  DWord w = zero(std::move(lie));
  w.terms_[{g}] = 1;
  return w;
}

void DWord::addTerm(const Mono& m, const Rat& c) {
  if (is_zero(c)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

Parity DWord::monoParity(const LieSpec& lie, const Mono& m) {
  int p = 0;
  for (int g : m) p ^= lie.parity(g) == Parity::Odd ? 1 : 0;
  return p ? Parity::Odd : Parity::Even;
}

bool DWord::isNormal(const LieSpec& lie, const Mono& m) {
  for (size_t i = 0; i + 1 < m.size(); ++i) {
    if (m[i] > m[i + 1]) return false;
    if (m[i] == m[i + 1] && lie.parity(m[i]) == Parity::Odd) return false;
  }
  return true;
}

namespace {

void addRawTerm(std::map<DWord::Mono, Rat>& out, const DWord::Mono& m, const Rat& c) {
  if (is_zero(c)) return;
  auto it = out.find(m);
  if (it == out.end()) {
    out[m] = c;
  } else {
    it->second += c;
    if (is_zero(it->second)) out.erase(it);
  }
}

// PBW rewriting: transposes d_a d_b = (-1)^{|a||b|} d_b d_a + [d_a, d_b] and
// collapses squared odd generators through d d = (1/2)[d,d]. Terminates for
// the declaration order.
void normalizeSequence(const LieSpec& lie, const DWord::Mono& seq, const Rat& c,
                       std::map<DWord::Mono, Rat>& out) {
  for (size_t i = 0; i + 1 < seq.size(); ++i) {
    int a = seq[i], b = seq[i + 1];
    bool oddSquare = a == b && lie.parity(a) == Parity::Odd;
    if (a > b || oddSquare) {
      if (oddSquare) {
        for (auto& [g, co] : lie.bracket(a, a)) {
          DWord::Mono next(seq.begin(), seq.begin() + i);
          next.push_back(g);
          next.insert(next.end(), seq.begin() + i + 2, seq.end());
          normalizeSequence(lie, next, c * co / 2, out);
        }
      } else {
        Rat sign = (lie.parity(a) == Parity::Odd && lie.parity(b) == Parity::Odd)
                       ? Rat(-1)
                       : Rat(1);
        DWord::Mono swapped = seq;
        std::swap(swapped[i], swapped[i + 1]);
        normalizeSequence(lie, swapped, c * sign, out);
        for (auto& [g, co] : lie.bracket(a, b)) {
          DWord::Mono next(seq.begin(), seq.begin() + i);
          next.push_back(g);
          next.insert(next.end(), seq.begin() + i + 2, seq.end());
          normalizeSequence(lie, next, c * co, out);
        }
      }
      return;
    }
  }
  addRawTerm(out, seq, c);
}

}  // namespace

std::map<DWord::Mono, Rat> DWord::normalizedTerms(const LieSpec& lie, const Mono& seq,
                                                  const Rat& c) {
  std::map<Mono, Rat> out;
  normalizeSequence(lie, seq, c, out);
  return out;
}

DWord DWord::fromSequence(LiePtr lie, const Mono& seq, const Rat& c) {
  DWord w = zero(std::move(lie));
  w.terms_ = normalizedTerms(*w.lie_, seq, c);
  return w;
}

DWord DWord::operator-() const { return scaled(Rat(-1)); }

DWord DWord::scaled(const Rat& c) const {
  DWord w = zero(lie_);
  if (is_zero(c)) return w;
  for (auto& [m, co] : terms_) w.terms_[m] = co * c;
  return w;
}

DWord DWord::operator+(const DWord& o) const {
  DWord w = *this;
  for (auto& [m, co] : o.terms_) w.addTerm(m, co);
  return w;
}

DWord DWord::operator-(const DWord& o) const { return *this + (-o); }

DWord DWord::operator*(const DWord& o) const {
  DWord w = zero(lie_);
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) {
      Mono seq = ma;
      seq.insert(seq.end(), mb.begin(), mb.end());
      for (auto& [m, c] : normalizedTerms(*lie_, seq, ca * cb)) w.addTerm(m, c);
    }
  return w;
}

Rat DWord::counit() const {
  auto it = terms_.find({});
  return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<Parity> DWord::parity() const {
  if (terms_.empty()) return Parity::Even;
  std::optional<Parity> p;
  for (auto& [m, c] : terms_) {
    Parity mp = monoParity(*lie_, m);
    if (!p)
      p = mp;
    else if (*p != mp)
      return std::nullopt;
  }
  return p;
}

std::string DWord::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& [m, c] : terms_) {
    Rat a = abs(c);
    if (first)
      out << (sgn(c) < 0 ? "-" : "");
    else
      out << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    std::ostringstream w;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i) w << "*";
      w << lie_->gen(m[i]).name;
    }
    if (m.empty()) {
      out << to_string(a);
    } else {
      if (a != 1) out << to_string(a) << "*";
      out << w.str();
    }
  }
  return out.str();
}

std::vector<DWord::Mono> enumeratePbwMonos(const LieSpec& lie, int maxLen) {
  std::vector<DWord::Mono> out;
  std::vector<DWord::Mono> frontier{{}};
  out.push_back({});
  for (int len = 1; len <= maxLen; ++len) {
    std::vector<DWord::Mono> next;
    for (auto& m : frontier) {
      int lo = m.empty() ? 0 : m.back();
      for (int g = lo; g < lie.genCount(); ++g) {
        if (!m.empty() && g == m.back() && lie.parity(g) == Parity::Odd) continue;
        DWord::Mono ext = m;
        ext.push_back(g);
        next.push_back(ext);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace superpv
