#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "simplexint/core.hpp"
#include "simplexint/lattice.hpp"

namespace simplexint {

inline constexpr std::uint64_t kDefaultStateGuard = 10'000'000;
inline constexpr std::uint64_t kDefaultExpansionGuard = 10'000'000;

// Occupancy k_ij of class-j jobs at station i, with Σ_i k_ij = N_j.
class NetworkState {
 public:
  NetworkState(std::size_t stations, std::size_t classes);

  std::size_t stations() const { return stations_; }
  std::size_t classes() const { return classes_; }
  std::size_t operator()(std::size_t i, std::size_t j) const { return k_[i * classes_ + j]; }
  std::size_t& operator()(std::size_t i, std::size_t j) { return k_[i * classes_ + j]; }
  std::size_t row_total(std::size_t i) const;

  bool belongs_to(const Instance& instance) const;

  friend bool operator==(const NetworkState&, const NetworkState&) = default;

 private:
  std::size_t stations_;
  std::size_t classes_;
  std::vector<std::size_t> k_;
};

// ∏_j C(N_j + n - 1, n - 1), saturating at UINT64_MAX.
std::uint64_t state_space_size(const Instance& instance);

// Visits every state of S exactly once in a fixed order.
void for_each_state(const Instance& instance,
                    const std::function<void(const NetworkState&)>& visit);
std::vector<NetworkState> enumerate_states(const Instance& instance);

// ∏_i (k_i! / ∏_j k_ij!) ∏_l θ_il^{k_il}
Rational state_weight(const Instance& instance, const NetworkState& state);

ComputationResult bruteforce_g(const Instance& instance,
                               std::uint64_t guard = kDefaultStateGuard);

// weight / G. Throws ZeroNormalizingConstant when G == 0.
Rational state_probability(const Instance& instance, const NetworkState& state);
// Same, reusing a precomputed G.
Rational state_probability(const Instance& instance, const NetworkState& state,
                           const Rational& g);

// Multivariate power series truncated to the box 0 <= m <= upper.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<std::size_t> upper);

  static TruncatedSeries one(std::vector<std::size_t> upper);
  // Σ_k (Σ_j c_j z_j)^k truncated to the box.
  static TruncatedSeries geometric(std::vector<std::size_t> upper,
                                   std::span<const Rational> coefficients);

  const Box& box() const { return box_; }
  const Rational& coefficient(std::span<const std::size_t> m) const;
  Rational& coefficient(std::span<const std::size_t> m);

  // Product truncated to this series' box. Both operands must share it.
  TruncatedSeries multiply(const TruncatedSeries& other,
                           std::uint64_t* products = nullptr) const;

 private:
  Box box_;
  std::vector<Rational> coeffs_;
};

// Coefficient of z^N in ∏_i (1 - Σ_j z_j θ_ij)^{-1}. `box_upper` may be
// used to truncate at a larger box than N.
ComputationResult taylor_g(const Instance& instance);
ComputationResult taylor_g(const Instance& instance, std::vector<std::size_t> box_upper);

// J by expanding ∏_j (Σ_i θ_ij x_i)^{N_j} into monomials and integrating
// each with ∫_Δ x^a dm = ∏ a_i! / (|a| + n - 1)!.
ComputationResult monomial_integrate_j(const Instance& instance,
                                       std::uint64_t guard = kDefaultExpansionGuard);

}  // namespace simplexint
