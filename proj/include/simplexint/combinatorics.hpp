#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "simplexint/rational.hpp"

namespace simplexint {

// Memoized factorials over arbitrary-precision integers. One table is owned
// per computation; it grows on demand.
class FactorialTable {
 public:
  explicit FactorialTable(std::size_t reserve_up_to = 0);

  const BigInt& factorial(std::size_t k);
  BigInt binomial(std::size_t n, std::size_t k);
  // (Σ parts)! / ∏ parts!
  BigInt multinomial(std::span<const std::size_t> parts);

 private:
  std::vector<BigInt> fact_;
};

BigInt factorial(std::size_t k);
BigInt binomial(std::size_t n, std::size_t k);

// Saturating binomial on 64-bit unsigned integers, for cost estimates and
// guards. Returns UINT64_MAX on overflow.
unsigned long long binomial_saturating(unsigned long long n, unsigned long long k);
unsigned long long mul_saturating(unsigned long long a, unsigned long long b);

}  // namespace simplexint
