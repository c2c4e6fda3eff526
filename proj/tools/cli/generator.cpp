#include "cli/generator.hpp"

namespace simplexint::cli {

std::uint64_t InstanceGenerator::uniform(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return engine_();
  // Rejection sampling removes modulo bias.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + x % span;
}

Rational InstanceGenerator::scalar(const RandomThetaOptions& opts) {
  while (true) {
    const long q = static_cast<long>(uniform(1, static_cast<std::uint64_t>(opts.max_denominator)));
    const long lo = opts.lo * q;
    const long hi = opts.hi * q;
    const long p = lo + static_cast<long>(uniform(0, static_cast<std::uint64_t>(hi - lo)));
    if (opts.nonzero && p == 0) continue;
    return Rational(p, q);
  }
}

ThetaMatrix InstanceGenerator::theta(std::size_t rows, std::size_t cols,
                                     const RandomThetaOptions& opts) {
  ThetaMatrix out(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) {
      Rational v;
      bool clash;
      do {
        v = scalar(opts);
        clash = false;
        if (opts.distinct_columns) {
          for (std::size_t k = 0; k < i; ++k) clash = clash || out(k, j) == v;
        }
      } while (clash);
      out(i, j) = std::move(v);
    }
  }
  return out;
}

Instance InstanceGenerator::instance(std::size_t rows, std::vector<std::size_t> population,
                                     const RandomThetaOptions& opts) {
  const std::size_t cols = population.size();
  return Instance(theta(rows, cols, opts), Population(std::move(population)));
}

}  // namespace simplexint::cli
