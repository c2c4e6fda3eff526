#pragma once

#include <cstddef>
#include <vector>

#include "simplexint/core.hpp"

namespace simplexint {

// A matrix given as distinct base rows with per-row copy counts. The
// effective matrix has sum(mult) rows.
struct RowMultiplicity {
  ThetaMatrix base;
  std::vector<std::size_t> mult;

  std::size_t effective_rows() const;
};

// Folds identical rows (exact equality over all columns) of theta, keeping
// first-occurrence order.
RowMultiplicity fold_rows(const ThetaMatrix& theta);

// Convolution recurrence over stations and the population box:
//   G(θ, m) = G(θ - θ_n, m) + Σ_j θ_nj G(θ, m - 1_j)
// with G(∅, m) = 0 for m != 0 and G(·, 0) = 1. Two row layers are kept; the
// work counter is the number of cells filled, (n + 1) ∏ (N_j + 1).
ComputationResult convolution_g(const Instance& instance);

// Recurrence by chain: G(θ, N) = N_d^{-1} Σ_i θ_id G(θ + θ_i, N - 1_d),
// classes reduced from d down to 1. Identical rows are aggregated into
// multiplicities. The work counter is the number of (multiplicity vector,
// remaining population) states evaluated.
ComputationResult recal_g(const Instance& instance);

}  // namespace simplexint
