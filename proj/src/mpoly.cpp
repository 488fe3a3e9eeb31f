#include "superpv/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace superpv {

MPoly MPoly::constant(int nvars, const Rat& c) {
  MPoly p(nvars);
  if (!is_zero(c)) p.terms_[Exp(nvars, 0)] = c;
  return p;
}

MPoly MPoly::variable(int nvars, int idx, uint32_t exp) {
  if (idx < 0 || idx >= nvars) throw std::invalid_argument("MPoly: bad variable index");
  MPoly p(nvars);
  Exp e(nvars, 0);
  e[idx] = exp;
  p.terms_[e] = 1;
  return p;
}

bool MPoly::isConstant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 &&
         std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                     [](uint32_t e) { return e == 0; });
}

Rat MPoly::constantValue() const {
  Exp zero(nvars_, 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::addTerm(const Exp& e, const Rat& c) {
  if (is_zero(c)) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_[e] = c;
  } else {
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r(nvars_);
  for (auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  for (auto& [e, c] : o.terms_) r.addTerm(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  for (auto& [e, c] : o.terms_) r.addTerm(e, -c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r(nvars_);
  Exp sum(nvars_, 0);
  for (auto& [ea, ca] : terms_) {
    for (auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) sum[i] = ea[i] + eb[i];
      r.addTerm(sum, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::scaled(const Rat& c) const {
  MPoly r(nvars_);
  if (is_zero(c)) return r;
  for (auto& [e, t] : terms_) r.terms_[e] = t * c;
  return r;
}

MPoly MPoly::pow(uint32_t k) const {
  MPoly r = constant(nvars_, 1);
  for (uint32_t i = 0; i < k; ++i) r = r * (*this);
  return r;
}

uint32_t MPoly::degree() const {
  uint32_t d = 0;
  for (auto& [e, c] : terms_) {
    uint32_t s = 0;
    for (uint32_t x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

uint32_t MPoly::degree(int var) const {
  uint32_t d = 0;
  for (auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

MPoly MPoly::derivative(int var) const {
  MPoly r(nvars_);
  for (auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exp e2 = e;
    e2[var] -= 1;
    r.addTerm(e2, c * Rat(e[var]));
  }
  return r;
}

MPoly MPoly::coeffOfPower(int var, uint32_t k) const {
  MPoly r(nvars_);
  for (auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    Exp e2 = e;
    e2[var] = 0;
    r.addTerm(e2, c);
  }
  return r;
}

bool MPoly::usesVar(int var) const {
  for (auto& [e, c] : terms_)
    if (e[var] != 0) return true;
  return false;
}

const Rat& MPoly::leadCoeff() const {
  if (terms_.empty()) throw std::logic_error("MPoly::leadCoeff on zero");
  return terms_.rbegin()->second;
}

const MPoly::Exp& MPoly::leadExp() const {
  if (terms_.empty()) throw std::logic_error("MPoly::leadExp on zero");
  return terms_.rbegin()->first;
}

namespace {

bool expDivides(const MPoly::Exp& a, const MPoly::Exp& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

std::optional<MPoly> MPoly::dividedBy(const MPoly& d) const {
  if (d.isZero()) return std::nullopt;
  MPoly rem = *this;
  MPoly quo(nvars_);
  const Exp& dl = d.leadExp();
  const Rat& dc = d.leadCoeff();
  while (!rem.isZero()) {
    const Exp& rl = rem.leadExp();
    if (!expDivides(dl, rl)) return std::nullopt;
    Exp q(nvars_);
    for (int i = 0; i < nvars_; ++i) q[i] = rl[i] - dl[i];
    Rat qc = rem.leadCoeff() / dc;
    MPoly qt(nvars_);
    qt.terms_[q] = qc;
    quo.addTerm(q, qc);
    rem = rem - d * qt;
  }
  return quo;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest monomial first reads naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rat c = it->second;
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    Rat ac = abs(c);
    bool hasVar = false;
    std::ostringstream vars;
    for (int i = 0; i < nvars_; ++i) {
      if (it->first[i] == 0) continue;
      if (hasVar) vars << "*";
      vars << names[i];
      if (it->first[i] > 1) vars << "^" << it->first[i];
      hasVar = true;
    }
    if (!hasVar) {
      out << ac.get_str();
    } else {
      if (ac != 1) out << ac.get_str() << "*";
      out << vars.str();
    }
  }
  return out.str();
}

namespace {

// View a as a univariate polynomial in `var`, coefficients in the remaining
// variables (still carried with the full variable count).
std::vector<MPoly> univariateView(const MPoly& a, int var) {
  std::vector<MPoly> coeffs(a.degree(var) + 1, MPoly(a.nvars()));
  for (uint32_t k = 0; k <= a.degree(var); ++k) coeffs[k] = a.coeffOfPower(var, k);
  while (coeffs.size() > 1 && coeffs.back().isZero()) coeffs.pop_back();
  return coeffs;
}

MPoly normalizeLead(const MPoly& a) {
  if (a.isZero()) return a;
  return a.scaled(Rat(1) / a.leadCoeff());
}

MPoly contentIn(const MPoly& a, int var) {
  MPoly c(a.nvars());
  for (auto& part : univariateView(a, var)) {
    if (part.isZero()) continue;
    c = mpolyGcd(c, part);
  }
  return c;
}

// Pseudo-remainder of a by b in `var`. Leading terms cancel exactly, so the
// degree strictly drops each round.
MPoly prem(MPoly a, const MPoly& b, int var) {
  uint32_t db = b.degree(var);
  MPoly lb = b.coeffOfPower(var, db);
  while (!a.isZero() && a.degree(var) >= db) {
    uint32_t da = a.degree(var);
    MPoly la = a.coeffOfPower(var, da);
    MPoly shift = (da == db) ? MPoly::constant(a.nvars(), Rat(1))
                             : MPoly::variable(a.nvars(), var, da - db);
    a = lb * a - la * shift * b;
  }
  return a;
}

}  // namespace

MPoly mpolyGcd(const MPoly& a, const MPoly& b) {
  if (a.isZero()) return normalizeLead(b);
  if (b.isZero()) return normalizeLead(a);
  if (a.isConstant() || b.isConstant())
    return MPoly::constant(a.nvars(), Rat(1));
  int var = -1;
  for (int v = 0; v < a.nvars() && var < 0; ++v)
    if (a.usesVar(v) || b.usesVar(v)) var = v;
  if (!a.usesVar(var)) return mpolyGcd(contentIn(b, var), a);
  if (!b.usesVar(var)) return mpolyGcd(contentIn(a, var), b);

  MPoly ca = contentIn(a, var);
  MPoly cb = contentIn(b, var);
  MPoly c = mpolyGcd(ca, cb);
  MPoly pa = *a.dividedBy(ca);
  MPoly pb = *b.dividedBy(cb);
  while (!pb.isZero()) {
    MPoly r = prem(pa, pb, var);
    pa = pb;
    if (r.isZero()) {
      pb = r;
    } else {
      pb = *r.dividedBy(contentIn(r, var));
    }
  }
  return normalizeLead(c * pa);
}

}  // namespace superpv
