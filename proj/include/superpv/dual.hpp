#pragma once

#include "superpv/dmodule.hpp"

namespace superpv {

enum class Side { Left, Right };

// Homogeneous K-linear functional on a free module, by its values on the
// basis: vals[i] = f(v_i), homogeneous of parity |f| + |v_i|.
struct ModFunctional {
  Parity parity = Parity::Even;
  std::vector<SuperElem> vals;
};

// True when every value is homogeneous of the declared parity.
bool functionalHomogeneous(const DModule& mod, const ModFunctional& f);

// Generator action on Hom_{K-}(V,K) (left) via df(v) = d_[2] f(S^b^{-1}(d_[1]) v)
// or on Hom_{-K}(V,K) (right) via df(v) = d_[1] f(S^b(d_[2]) v), specialized
// to primitive d.
ModFunctional functionalApplyGen(const DModule& mod, const DAction& action, Side side,
                                 int lieGen, const ModFunctional& f);

// Structure matrices of the dual module in the dual basis, so that the
// evaluation pairing is D-linear. Throws InconsistentModuleError when `verify`
// and the input fails the cocycle relations.
DModule dualStructure(const DModule& mod, const DAction& action, Side side,
                      bool verify = true);

// f ∘ sigma^{|f|}: swaps left- and right-linear representations; an
// involution. Throws ValidationError on non-homogeneous input.
ModFunctional parityFlip(const DModule& mod, const ModFunctional& f);

// Pairing <f, x> = f(x) of a functional against a coordinate column
// (x = sum_i coords[i] v_i, left coefficients).
SuperElem evalPairing(const DModule& mod, Side side, const ModFunctional& f,
                      const std::vector<SuperElem>& coords);

}  // namespace superpv
