#include "simplexint/combinatorics.hpp"

#include <limits>
#include <numeric>

namespace simplexint {

FactorialTable::FactorialTable(std::size_t reserve_up_to) {
  fact_.reserve(reserve_up_to + 1);
  fact_.emplace_back(1);
  factorial(reserve_up_to);
}

const BigInt& FactorialTable::factorial(std::size_t k) {
  while (fact_.size() <= k) {
    const BigInt next = fact_.back() * static_cast<unsigned long>(fact_.size());
    fact_.push_back(next);
  }
  return fact_[k];
}

BigInt FactorialTable::binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

BigInt FactorialTable::multinomial(std::span<const std::size_t> parts) {
  const std::size_t total = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  BigInt den(1);
  for (std::size_t p : parts) den *= factorial(p);
  return factorial(total) / den;
}

BigInt factorial(std::size_t k) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

unsigned long long mul_saturating(unsigned long long a, unsigned long long b) {
  constexpr auto kMax = std::numeric_limits<unsigned long long>::max();
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

unsigned long long binomial_saturating(unsigned long long n, unsigned long long k) {
  constexpr auto kMax = std::numeric_limits<unsigned long long>::max();
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  // r * (n - k + i) / i stays integral at every step.
  unsigned __int128 r = 1;
  for (unsigned long long i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kMax) return kMax;
  }
  return static_cast<unsigned long long>(r);
}

}  // namespace simplexint
