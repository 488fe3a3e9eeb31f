#pragma once

#include <string>

#include "superpv/mpoly.hpp"

namespace superpv {

// Element of the body field: a quotient of multivariate polynomials over the
// rationals in the declared body variables. Kept reduced (gcd cancelled) with
// monic denominator, so representation equality is field equality.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(MPoly::constant(0, 1)) {}
  explicit RatFunc(int nvars)
      : num_(nvars), den_(MPoly::constant(nvars, 1)) {}
  RatFunc(MPoly num, MPoly den);

  static RatFunc constant(int nvars, const Rat& c) {
    return RatFunc(MPoly::constant(nvars, c), MPoly::constant(nvars, 1));
  }
  static RatFunc fromPoly(MPoly p) {
    int nv = p.nvars();
    return RatFunc(std::move(p), MPoly::constant(nv, 1));
  }
  static RatFunc variable(int nvars, int idx) {
    return fromPoly(MPoly::variable(nvars, idx));
  }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  int nvars() const { return num_.nvars(); }

  bool isZero() const { return num_.isZero(); }
  bool isPolynomial() const { return den_.isConstant(); }
  bool isRationalConstant() const { return num_.isConstant() && den_.isConstant(); }
  Rat rationalValue() const { return num_.constantValue() / den_.constantValue(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;  // throws on division by zero
  RatFunc inverse() const;

  RatFunc derivative(int var) const;  // quotient rule

  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  bool operator<(const RatFunc& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
  }

  std::string str(const std::vector<std::string>& names) const;

 private:
  void reduce();
  MPoly num_, den_;
};

}  // namespace superpv
