#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "superpv/rational.hpp"
#include "superpv/report.hpp"
#include "superpv/ring.hpp"

namespace superpv {

struct LieGen {
  std::string name;
  Parity parity;
};

// Linear combination of Lie generators, tidied (no zero coefficients, sorted
// by generator index).
using GenCombo = std::map<int, Rat>;

// Finitely presented Lie superalgebra: generators with parities and a bracket
// table [d_i, d_j] = d_i d_j - (-1)^{|d_i||d_j|} d_j d_i. Omitted pairs
// bracket to zero; undeclared opposites follow by super-antisymmetry.
class LieSpec {
 public:
  explicit LieSpec(std::vector<LieGen> gens);

  int genCount() const { return static_cast<int>(gens_.size()); }
  const LieGen& gen(int i) const { return gens_[i]; }
  Parity parity(int i) const { return gens_[i].parity; }
  std::optional<int> findGen(const std::string& name) const;

  void setBracket(int i, int j, GenCombo combo);
  bool declared(int i, int j) const { return declared_.count({i, j}) > 0; }
  // [d_i, d_j], resolving undeclared entries through super-antisymmetry.
  GenCombo bracket(int i, int j) const;

  const std::map<std::pair<int, int>, GenCombo>& declaredBrackets() const {
    return declared_;
  }

 private:
  std::vector<LieGen> gens_;
  std::map<std::pair<int, int>, GenCombo> declared_;
};

using LiePtr = std::shared_ptr<const LieSpec>;

// Verifies super-antisymmetry of the declared table, bracket parity
// |[x,y]| = |x|+|y|, and the super Jacobi identity on every generator triple.
CheckReport checkLieSpec(const LieSpec& spec);

}  // namespace superpv
