#include "superpv/ratfunc.hpp"

#include <sstream>
#include <stdexcept>

namespace superpv {

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.isZero()) throw std::domain_error("RatFunc: zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.isZero()) {
    den_ = MPoly::constant(num_.nvars(), 1);
    return;
  }
  if (!den_.isConstant() && !num_.isConstant()) {
    MPoly g = mpolyGcd(num_, den_);
    if (!g.isConstant()) {
      num_ = *num_.dividedBy(g);
      den_ = *den_.dividedBy(g);
    }
  }
  // Monic denominator pins the representative.
  Rat lc = den_.leadCoeff();
  if (lc != 1) {
    num_ = num_.scaled(Rat(1) / lc);
    den_ = den_.scaled(Rat(1) / lc);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (isZero()) return o;
  if (o.isZero()) return *this;
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (isZero() || o.isZero()) return RatFunc(nvars());
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::inverse() const {
  if (isZero()) throw std::domain_error("RatFunc: inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::derivative(int var) const {
  if (isPolynomial())
    return RatFunc(num_.derivative(var), den_);
  return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var),
                 den_ * den_);
}

std::string RatFunc::str(const std::vector<std::string>& names) const {
  std::ostringstream out;
  if (isPolynomial()) {
    Rat c = den_.constantValue();  // 1 after reduce()
    out << num_.scaled(Rat(1) / c).str(names);
  } else {
    out << "(" << num_.str(names) << ")/(" << den_.str(names) << ")";
  }
  return out.str();
}

}  // namespace superpv
