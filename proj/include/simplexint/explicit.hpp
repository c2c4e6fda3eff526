#pragma once

#include <cstddef>
#include <vector>

#include "simplexint/core.hpp"

namespace simplexint {

// Distinct rows of θ (for d = 1, distinct coefficients) with multiplicities.
struct CoefficientGroups {
  ThetaMatrix distinct;
  std::vector<std::size_t> mult;

  std::size_t groups() const { return mult.size(); }
};

CoefficientGroups group_coefficients(const ThetaMatrix& theta);

// d = 1, distinct coefficients: the divided difference
//   [θ_1, ..., θ_n] x^{N+n-1} = Σ_i θ_i^{N+n-1} / ∏_{k≠i} (θ_i - θ_k).
// Throws WrongClassCount or RepeatedCoefficients.
ComputationResult koe58_g(const Instance& instance);

// Same sum with the denominator written as ∏_{k≠i} (θ_k - θ_i). This
// equals (-1)^{n-1} G and exists only to pin that sign relation in tests.
Rational koe58_reversed_denominator(const Instance& instance);

// d = 1 with repeated coefficients allowed: divided difference over
// grouped nodes, summing compositions r of m_j - 1 across all groups.
ComputationResult gen_g(const Instance& instance);

// Box sum over 0 <= t <= N of divided differences at the aggregated nodes
// Σ_j t_j θ_ij. Requires those nodes to be distinct for every t != 0;
// throws DegenerateDenominator otherwise.
ComputationResult explicit1_g(const Instance& instance);

// Generalisation of explicit1_g to identical rows, grouping rows by exact
// equality and using the grouped divided difference for each t.
ComputationResult explicit_repeated_g(const Instance& instance);

// Sum over h >= 0, Σ h_i <= N of
//   (-1)^{N-h} C(N+n-1, N-h) ∏_j (Σ_i h_i θ_ij)^{N_j} / ∏ N_j!.
// No distinctness requirement.
ComputationResult explicit2_g(const Instance& instance);

}  // namespace simplexint
