#include "simplexint/core.hpp"

#include <numeric>
#include <string>

#include "simplexint/combinatorics.hpp"

namespace simplexint {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidLiteral: return "InvalidLiteral";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NegativePopulation: return "NegativePopulation";
    case ErrorKind::EmptyClasses: return "EmptyClasses";
    case ErrorKind::EmptyStations: return "EmptyStations";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidDecrement: return "InvalidDecrement";
    case ErrorKind::RepeatedCoefficients: return "RepeatedCoefficients";
    case ErrorKind::WrongClassCount: return "WrongClassCount";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::StateSpaceTooLarge: return "StateSpaceTooLarge";
    case ErrorKind::ExpansionTooLarge: return "ExpansionTooLarge";
    case ErrorKind::ZeroNormalizingConstant: return "ZeroNormalizingConstant";
    case ErrorKind::StateNotInSpace: return "StateNotInSpace";
  }
  return "Unknown";
}

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Convolution: return "convolution";
    case Algorithm::Recal: return "recal";
    case Algorithm::Koe58: return "koe58";
    case Algorithm::Gen: return "gen";
    case Algorithm::Explicit1: return "explicit1";
    case Algorithm::ExplicitRepeated: return "explicit_repeated";
    case Algorithm::Explicit2: return "explicit2";
    case Algorithm::Taylor: return "taylor";
    case Algorithm::BruteForce: return "bruteforce";
    case Algorithm::Monomial: return "monomial";
  }
  return "unknown";
}

std::string_view to_string(Quantity q) { return q == Quantity::G ? "G" : "J"; }

ThetaMatrix::ThetaMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (cols == 0) throw Error(ErrorKind::EmptyClasses, "theta must have at least one column");
}

ThetaMatrix::ThetaMatrix(std::size_t cols, std::vector<std::vector<Rational>> rows)
    : ThetaMatrix(rows.size(), cols) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(ErrorKind::DimensionMismatch,
                  "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                      " entries, expected " + std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) (*this)(i, j) = std::move(rows[i][j]);
  }
}

ThetaMatrix remove_row(const ThetaMatrix& theta, std::size_t i) {
  if (i >= theta.rows()) {
    throw Error(ErrorKind::IndexOutOfRange, "row " + std::to_string(i) + " out of range for " +
                                                std::to_string(theta.rows()) + " rows");
  }
  ThetaMatrix out(theta.rows() - 1, theta.cols());
  for (std::size_t r = 0, o = 0; r < theta.rows(); ++r) {
    if (r == i) continue;
    for (std::size_t j = 0; j < theta.cols(); ++j) out(o, j) = theta(r, j);
    ++o;
  }
  return out;
}

ThetaMatrix append_row(const ThetaMatrix& theta, std::span<const Rational> row) {
  if (row.size() != theta.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "appended row has " + std::to_string(row.size()) +
                                                  " entries, expected " +
                                                  std::to_string(theta.cols()));
  }
  ThetaMatrix out(theta.rows() + 1, theta.cols());
  for (std::size_t r = 0; r < theta.rows(); ++r) {
    for (std::size_t j = 0; j < theta.cols(); ++j) out(r, j) = theta(r, j);
  }
  for (std::size_t j = 0; j < theta.cols(); ++j) out(theta.rows(), j) = row[j];
  return out;
}

Population::Population(std::vector<std::size_t> counts)
    : counts_(std::move(counts)),
      total_(std::accumulate(counts_.begin(), counts_.end(), std::size_t{0})) {
  if (counts_.empty()) throw Error(ErrorKind::EmptyClasses, "population must have a class");
}

Population Population::decrement(std::size_t j) const {
  if (j >= counts_.size()) throw Error(ErrorKind::IndexOutOfRange, "class index out of range");
  if (counts_[j] == 0) {
    throw Error(ErrorKind::InvalidDecrement, "N_" + std::to_string(j) + " is already zero");
  }
  auto next = counts_;
  --next[j];
  return Population(std::move(next));
}

Instance::Instance(ThetaMatrix theta, Population population)
    : theta_(std::move(theta)), population_(std::move(population)) {
  if (theta_.cols() != population_.classes()) {
    throw Error(ErrorKind::DimensionMismatch,
                "theta has " + std::to_string(theta_.cols()) + " columns but population has " +
                    std::to_string(population_.classes()) + " classes");
  }
  if (theta_.rows() == 0) throw Error(ErrorKind::EmptyStations, "theta must have at least one row");
}

Instance validate(const std::vector<std::vector<Rational>>& raw_theta,
                  const std::vector<std::int64_t>& raw_population) {
  if (raw_population.empty()) throw Error(ErrorKind::EmptyClasses, "population is empty");
  if (raw_theta.empty()) throw Error(ErrorKind::EmptyStations, "theta has no rows");
  const std::size_t d = raw_theta.front().size();
  if (d == 0) throw Error(ErrorKind::EmptyClasses, "theta has no columns");
  for (std::size_t i = 0; i < raw_theta.size(); ++i) {
    if (raw_theta[i].size() != d) {
      throw Error(ErrorKind::DimensionMismatch, "theta row " + std::to_string(i) +
                                                    " has " + std::to_string(raw_theta[i].size()) +
                                                    " entries, expected " + std::to_string(d));
    }
  }
  if (raw_population.size() != d) {
    throw Error(ErrorKind::DimensionMismatch,
                "theta has " + std::to_string(d) + " columns but population has " +
                    std::to_string(raw_population.size()) + " entries");
  }
  std::vector<std::size_t> counts;
  counts.reserve(d);
  for (std::size_t j = 0; j < d; ++j) {
    if (raw_population[j] < 0) {
      throw Error(ErrorKind::NegativePopulation,
                  "N_" + std::to_string(j) + " = " + std::to_string(raw_population[j]));
    }
    counts.push_back(static_cast<std::size_t>(raw_population[j]));
  }
  return Instance(ThetaMatrix(d, raw_theta), Population(std::move(counts)));
}

namespace {

// (N + n - 1)! / ∏ N_j!
BigInt multinomial_scale(const Instance& instance) {
  FactorialTable f(instance.population().total() + instance.stations() - 1);
  BigInt den(1);
  for (std::size_t nj : instance.population().counts()) den *= f.factorial(nj);
  return f.factorial(instance.population().total() + instance.stations() - 1) / den;
}

}  // namespace

Rational g_to_j(const Rational& g, const Instance& instance) {
  return g / Rational(multinomial_scale(instance));
}

Rational j_to_g(const Rational& j, const Instance& instance) {
  return j * Rational(multinomial_scale(instance));
}

}  // namespace simplexint
