#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "simplexint/error.hpp"
#include "simplexint/rational.hpp"

namespace simplexint {

// n x d coefficient matrix of the linear forms, row-major. Rows are
// simplex variables (stations), columns are classes. n == 0 is the empty
// matrix used as a recursion operand; d is always >= 1.
class ThetaMatrix {
 public:
  ThetaMatrix(std::size_t rows, std::size_t cols);
  ThetaMatrix(std::size_t cols, std::vector<std::vector<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  friend bool operator==(const ThetaMatrix&, const ThetaMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 1;
  std::vector<Rational> data_;
};

ThetaMatrix remove_row(const ThetaMatrix& theta, std::size_t i);
ThetaMatrix append_row(const ThetaMatrix& theta, std::span<const Rational> row);

// Per-class job counts N = (N_1, ..., N_d).
class Population {
 public:
  explicit Population(std::vector<std::size_t> counts);

  std::size_t classes() const { return counts_.size(); }
  std::size_t total() const { return total_; }
  std::size_t operator[](std::size_t j) const { return counts_[j]; }
  std::span<const std::size_t> counts() const { return counts_; }
  bool is_zero() const { return total_ == 0; }

  // N - 1_j; throws InvalidDecrement when N_j == 0.
  Population decrement(std::size_t j) const;

  friend bool operator==(const Population&, const Population&) = default;

 private:
  std::vector<std::size_t> counts_;
  std::size_t total_ = 0;
};

// A validated (theta, N) pair: theta.cols() == N.classes() and n >= 1.
class Instance {
 public:
  Instance(ThetaMatrix theta, Population population);

  const ThetaMatrix& theta() const { return theta_; }
  const Population& population() const { return population_; }
  std::size_t stations() const { return theta_.rows(); }
  std::size_t classes() const { return theta_.cols(); }

 private:
  ThetaMatrix theta_;
  Population population_;
};

Instance validate(const std::vector<std::vector<Rational>>& raw_theta,
                  const std::vector<std::int64_t>& raw_population);

enum class Quantity { G, J };

enum class Algorithm {
  Convolution,
  Recal,
  Koe58,
  Gen,
  Explicit1,
  ExplicitRepeated,
  Explicit2,
  Taylor,
  BruteForce,
  Monomial,
};

std::string_view to_string(Algorithm a);
std::string_view to_string(Quantity q);

struct WorkCounters {
  std::uint64_t table_entries = 0;
  std::uint64_t terms = 0;

  friend bool operator==(const WorkCounters&, const WorkCounters&) = default;
};

struct ComputationResult {
  Quantity quantity = Quantity::G;
  Rational value;
  Algorithm algorithm = Algorithm::Convolution;
  WorkCounters work;
};

// J = (N_1! ... N_d! / (N + n - 1)!) G
Rational g_to_j(const Rational& g, const Instance& instance);
// G = ((N + n - 1)! / (N_1! ... N_d!)) J
Rational j_to_g(const Rational& j, const Instance& instance);

}  // namespace simplexint
