#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superpv/rational.hpp"

namespace superpv {

// Sparse multivariate polynomial over the rationals. The variable set is
// positional; names live with whoever owns the polynomial (ring specs print
// them). Terms are kept in lexicographic monomial order with no zero
// coefficients, so representation equality is polynomial equality.
class MPoly {
 public:
  using Exp = std::vector<uint32_t>;

  MPoly() : nvars_(0) {}
  explicit MPoly(int nvars) : nvars_(nvars) {}

  static MPoly constant(int nvars, const Rat& c);
  static MPoly variable(int nvars, int idx, uint32_t exp = 1);

  int nvars() const { return nvars_; }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  // Constant term; the whole value when isConstant().
  Rat constantValue() const;

  const std::map<Exp, Rat>& terms() const { return terms_; }

  void addTerm(const Exp& e, const Rat& c);

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly scaled(const Rat& c) const;
  MPoly pow(uint32_t k) const;

  bool operator==(const MPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const MPoly& o) const { return !(*this == o); }
  bool operator<(const MPoly& o) const { return terms_ < o.terms_; }

  uint32_t degree() const;              // total degree, 0 for the zero poly
  uint32_t degree(int var) const;       // degree in one variable
  MPoly derivative(int var) const;
  // Coefficient of var^k, as a polynomial with the same variable set
  // (var-free).
  MPoly coeffOfPower(int var, uint32_t k) const;
  bool usesVar(int var) const;

  // Coefficient of the lex-leading monomial.
  const Rat& leadCoeff() const;
  const Exp& leadExp() const;

  // Exact division; nullopt when the division leaves a remainder.
  std::optional<MPoly> dividedBy(const MPoly& d) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  std::map<Exp, Rat> terms_;
};

// GCD with lex-leading coefficient 1 (primitive-PRS recursion); gcd with 0 is
// the normalized other argument, gcd(0,0) = 0.
MPoly mpolyGcd(const MPoly& a, const MPoly& b);

}  // namespace superpv
