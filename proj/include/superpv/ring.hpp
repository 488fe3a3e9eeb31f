#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "superpv/ratfunc.hpp"

namespace superpv {

enum class Parity : uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<uint8_t>(a) ^ static_cast<uint8_t>(b)));
}
inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

struct RingGen {
  std::string name;
  Parity parity;
};

// Key of one monomial: a subset of the odd generator slots (bit set, each odd
// generator squares to zero) and an exponent vector over the even generator
// slots. Body-variable content lives in the RatFunc coefficient.
struct TermKey {
  uint64_t odd = 0;
  std::vector<uint16_t> exp;

  bool operator==(const TermKey& o) const { return odd == o.odd && exp == o.exp; }
  bool operator<(const TermKey& o) const {
    if (odd != o.odd) return odd < o.odd;
    return exp < o.exp;
  }
};

using TermMap = std::map<TermKey, RatFunc>;

// Presentation of a finitely generated supercommutative algebra over the body
// field Q(bodyVars): odd generators and even polynomial generators in one
// declaration list (parity overrides already applied), plus distinguished even
// denominators for localization. Denominators must be body-only (no odd
// content) and nonzero.
class RingSpec {
 public:
  struct Denominator {
    std::string name;
    TermMap terms;
  };

  RingSpec(std::vector<std::string> bodyVars, std::vector<RingGen> gens);

  int bodyVarCount() const { return static_cast<int>(bodyVars_.size()); }
  int genCount() const { return static_cast<int>(gens_.size()); }
  int oddSlotCount() const { return static_cast<int>(oddGenOfSlot_.size()); }
  int evenSlotCount() const { return static_cast<int>(evenGenOfSlot_.size()); }
  int denCount() const { return static_cast<int>(dens_.size()); }

  const std::vector<std::string>& bodyVars() const { return bodyVars_; }
  const std::vector<RingGen>& gens() const { return gens_; }
  const RingGen& gen(int i) const { return gens_[i]; }
  Parity genParity(int i) const { return gens_[i].parity; }
  int slotOfGen(int i) const { return slotOfGen_[i]; }
  int genOfOddSlot(int s) const { return oddGenOfSlot_[s]; }
  int genOfEvenSlot(int s) const { return evenGenOfSlot_[s]; }

  std::optional<int> findGen(const std::string& name) const;
  std::optional<int> findBodyVar(const std::string& name) const;
  std::optional<int> findDen(const std::string& name) const;

  // Denominators are attached after the element type exists; RingSpec is
  // mutable only through this until first shared use.
  void addDenominator(std::string name, TermMap terms);
  const std::vector<Denominator>& dens() const { return dens_; }

 private:
  std::vector<std::string> bodyVars_;
  std::vector<RingGen> gens_;
  std::vector<int> slotOfGen_;
  std::vector<int> oddGenOfSlot_;
  std::vector<int> evenGenOfSlot_;
  std::vector<Denominator> dens_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

// The purely even subring: same body variables and denominators, odd
// generators dropped.
RingPtr makeEvenSubring(const RingSpec& ring);

}  // namespace superpv
