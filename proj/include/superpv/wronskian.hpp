#pragma once

#include "superpv/action.hpp"
#include "superpv/matrix.hpp"

namespace superpv {

// Certificate of linear independence over the constants: homogeneous words
// d_1..d_m | d_{m+1}..d_{m+n} with (d_i a_j) invertible.
struct WronskianCertificate {
  bool found = false;
  std::vector<DWord::Mono> words;  // even words first, then odd
  SuperMatrix matrix;              // (d_i a_j), format m|n
  int bound = 0;
};

// Searches PBW words of length <= bound (by length, then lexicographically;
// first certificate wins) for m even and n odd words making (d_i a_j)
// invertible. Elements are listed even-first: the first m are even, the rest
// odd; violations raise ValidationError.
WronskianCertificate wronskianSearch(const std::vector<SuperElem>& elements, int m,
                                     const DAction& action, int bound);

}  // namespace superpv
