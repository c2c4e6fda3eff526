#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "simplexint/core.hpp"

namespace simplexint::cli {

struct RandomThetaOptions {
  long lo = -5;                 // entries lie in [lo, hi]
  long hi = 5;
  long max_denominator = 4;     // denominators drawn from 1..max_denominator
  bool distinct_columns = false;  // entries pairwise distinct within each column
  bool nonzero = false;           // exclude 0 (with lo > 0 this means strictly positive)
};

// Deterministic across platforms: only raw mt19937_64 output is used, never
// the implementation-defined distribution classes.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);  // inclusive
  Rational scalar(const RandomThetaOptions& opts);
  ThetaMatrix theta(std::size_t rows, std::size_t cols, const RandomThetaOptions& opts);
  Instance instance(std::size_t rows, std::vector<std::size_t> population,
                    const RandomThetaOptions& opts);

 private:
  std::mt19937_64 engine_;
};

}  // namespace simplexint::cli
