#pragma once

#include "superpv/dmodule.hpp"
#include "superpv/reduction.hpp"

namespace superpv {

// The built-in model family: Q[t] ⊗ Λ(th1..thr) with ∂ = d/dt, optionally an
// odd δ with [δ,δ] = 2∂ acting by δt = th1, δ th1 = 1 (other θ's
// annihilated). All series are polynomial truncations mod t^N with exact
// rational coefficients.
struct SeriesModel {
  RingPtr ring;
  LiePtr lie;
  std::shared_ptr<DAction> action;
  int tVar = 0;
  int delGen = 0;    // index of ∂ in the Lie spec
  int deltaGen = -1; // index of δ, -1 when absent

  static SeriesModel make(int oddGens, bool withDelta);
};

// t-coefficient utilities on elements with polynomial body scalars.
SuperElem coeffOfT(const SuperElem& a, int var, uint32_t k);  // t-free slice
SuperElem truncateT(const SuperElem& a, int var, uint32_t N);
SuperElem mulByTPow(const SuperElem& a, int var, uint32_t k);
// Exact power-series expansion mod t^N; coefficient denominators must be
// invertible at t = 0.
SuperElem seriesExpandT(const SuperElem& a, int var, uint32_t N);

struct SeriesSolution {
  SuperMatrix X;
  int order = 0;  // X is pinned mod t^order; residuals hold mod t^{order-1}
};

// Fundamental solution: X even, X|_{t=theta=0} = I, dX = F(d)X mod t^{N-1}
// for every generator, by coefficient recursion on the t-expansion with the
// theta-components split out. Throws on inconsistent F or non-polynomial
// entries.
SeriesSolution seriesSolve(const DModule& mod, const SeriesModel& model, int N,
                           bool verify = true);

// dX - F(d)X ≡ 0 mod t^{N-1} for every generator.
CheckReport seriesResidualCheck(const DModule& mod, const SeriesModel& model,
                                const SuperMatrix& X, int N);

struct SplittingReport {
  int evenCount = 0, oddCount = 0;
  bool fullCount = false;
  CheckReport residuals;       // the invariance of the transported functionals
  CheckReport bodyConsistent;  // body(X) solves the even-reduced system
  SuperMatrix X;
  SuperMatrix bodyX;           // over the even subring
};

// Counts the independent invariant functionals carried by the columns of the
// solution at truncation order and checks the body against the reduced
// classical system.
SplittingReport splittingReport(const DModule& mod, const SeriesModel& model, int N);

}  // namespace superpv
