#include "simplexint/oracles.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "simplexint/combinatorics.hpp"
#include "simplexint/recurrences.hpp"

namespace simplexint {

NetworkState::NetworkState(std::size_t stations, std::size_t classes)
    : stations_(stations), classes_(classes), k_(stations * classes, 0) {}

std::size_t NetworkState::row_total(std::size_t i) const {
  std::size_t s = 0;
  for (std::size_t j = 0; j < classes_; ++j) s += (*this)(i, j);
  return s;
}

bool NetworkState::belongs_to(const Instance& instance) const {
  if (stations_ != instance.stations() || classes_ != instance.classes()) return false;
  for (std::size_t j = 0; j < classes_; ++j) {
    std::size_t col = 0;
    for (std::size_t i = 0; i < stations_; ++i) col += (*this)(i, j);
    if (col != instance.population()[j]) return false;
  }
  return true;
}

std::uint64_t state_space_size(const Instance& instance) {
  const std::size_t n = instance.stations();
  std::uint64_t count = 1;
  for (std::size_t nj : instance.population().counts()) {
    count = mul_saturating(count, binomial_saturating(nj + n - 1, n - 1));
  }
  return count;
}

void for_each_state(const Instance& instance,
                    const std::function<void(const NetworkState&)>& visit) {
  const std::size_t n = instance.stations();
  const std::size_t d = instance.classes();
  const Population& pop = instance.population();

  // One composition of N_j over the stations per class, advanced like an
  // odometer with the last class fastest.
  std::vector<std::vector<std::size_t>> parts(d, std::vector<std::size_t>(n, 0));
  auto reset = [&](std::size_t j) {
    std::fill(parts[j].begin(), parts[j].end(), 0);
    parts[j][0] = pop[j];
  };
  for (std::size_t j = 0; j < d; ++j) reset(j);

  NetworkState state(n, d);
  while (true) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t i = 0; i < n; ++i) state(i, j) = parts[j][i];
    }
    visit(state);
    std::size_t j = d;
    while (j-- > 0) {
      if (next_composition(parts[j])) break;
      reset(j);
    }
    if (j == static_cast<std::size_t>(-1)) return;
  }
}

std::vector<NetworkState> enumerate_states(const Instance& instance) {
  std::vector<NetworkState> out;
  for_each_state(instance, [&](const NetworkState& s) { out.push_back(s); });
  return out;
}

namespace {

Rational weight_with(const Instance& instance, const NetworkState& state, FactorialTable& fact) {
  const ThetaMatrix& theta = instance.theta();
  BigInt multinom(1);
  Rational product(1);
  for (std::size_t i = 0; i < state.stations(); ++i) {
    BigInt den(1);
    for (std::size_t j = 0; j < state.classes(); ++j) {
      const std::size_t k = state(i, j);
      if (k == 0) continue;
      if (theta(i, j).is_zero()) return Rational{};
      den *= fact.factorial(k);
      product *= theta(i, j).pow(k);
    }
    multinom *= fact.factorial(state.row_total(i)) / den;
  }
  return Rational(multinom) * product;
}

void require_member(const Instance& instance, const NetworkState& state) {
  if (!state.belongs_to(instance)) {
    throw Error(ErrorKind::StateNotInSpace, "state does not belong to the instance's state space");
  }
}

}  // namespace

Rational state_weight(const Instance& instance, const NetworkState& state) {
  require_member(instance, state);
  FactorialTable fact(instance.population().total());
  return weight_with(instance, state, fact);
}

ComputationResult bruteforce_g(const Instance& instance, std::uint64_t guard) {
  const std::uint64_t size = state_space_size(instance);
  if (size > guard) {
    throw Error(ErrorKind::StateSpaceTooLarge, "state space has " + std::to_string(size) +
                                                   " states, guard is " + std::to_string(guard));
  }
  ComputationResult result{Quantity::G, {}, Algorithm::BruteForce, {}};
  FactorialTable fact(instance.population().total());
  for_each_state(instance, [&](const NetworkState& s) {
    result.value += weight_with(instance, s, fact);
    ++result.work.terms;
  });
  return result;
}

Rational state_probability(const Instance& instance, const NetworkState& state,
                           const Rational& g) {
  require_member(instance, state);
  if (g.is_zero()) {
    throw Error(ErrorKind::ZeroNormalizingConstant,
                "G = 0: state probabilities are undefined for this theta");
  }
  FactorialTable fact(instance.population().total());
  return weight_with(instance, state, fact) / g;
}

Rational state_probability(const Instance& instance, const NetworkState& state) {
  return state_probability(instance, state, convolution_g(instance).value);
}

TruncatedSeries::TruncatedSeries(std::vector<std::size_t> upper)
    : box_(std::move(upper)), coeffs_(box_.size()) {}

TruncatedSeries TruncatedSeries::one(std::vector<std::size_t> upper) {
  TruncatedSeries s(std::move(upper));
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::geometric(std::vector<std::size_t> upper,
                                           std::span<const Rational> coefficients) {
  TruncatedSeries s(std::move(upper));
  if (coefficients.size() != s.box_.dims()) {
    throw Error(ErrorKind::DimensionMismatch, "geometric series coefficient count mismatch");
  }
  std::size_t max_degree = 0;
  for (std::size_t u : s.box_.upper()) max_degree += u;
  FactorialTable fact(max_degree);

  // [z^m] Σ_k (c·z)^k = (|m| choose m) ∏ c_j^{m_j}
  std::vector<std::size_t> m(s.box_.dims(), 0);
  std::size_t idx = 0;
  do {
    Rational c(fact.multinomial(m));
    for (std::size_t j = 0; j < m.size() && !c.is_zero(); ++j) c *= coefficients[j].pow(m[j]);
    s.coeffs_[idx++] = std::move(c);
  } while (s.box_.next(m));
  return s;
}

const Rational& TruncatedSeries::coefficient(std::span<const std::size_t> m) const {
  if (!box_.contains(m)) throw Error(ErrorKind::IndexOutOfRange, "multi-index outside the box");
  return coeffs_[box_.index(m)];
}

Rational& TruncatedSeries::coefficient(std::span<const std::size_t> m) {
  if (!box_.contains(m)) throw Error(ErrorKind::IndexOutOfRange, "multi-index outside the box");
  return coeffs_[box_.index(m)];
}

TruncatedSeries TruncatedSeries::multiply(const TruncatedSeries& other,
                                          std::uint64_t* products) const {
  if (!std::equal(box_.upper().begin(), box_.upper().end(), other.box_.upper().begin(),
                  other.box_.upper().end())) {
    throw Error(ErrorKind::DimensionMismatch, "series boxes differ");
  }
  const std::size_t d = box_.dims();
  TruncatedSeries out(std::vector<std::size_t>(box_.upper().begin(), box_.upper().end()));
  std::vector<std::size_t> a(d, 0);
  std::size_t ia = 0;
  do {
    const Rational& lhs = coeffs_[ia++];
    if (lhs.is_zero()) continue;
    // b ranges over the sub-box that keeps a + b inside the truncation box.
    std::vector<std::size_t> room(d);
    for (std::size_t j = 0; j < d; ++j) room[j] = box_.upper()[j] - a[j];
    const Box sub(room);
    std::vector<std::size_t> b(d, 0);
    do {
      const std::size_t ib = box_.index(b);
      if (other.coeffs_[ib].is_zero()) continue;
      out.coeffs_[ib + box_.index(a)] += lhs * other.coeffs_[ib];
      if (products) ++*products;
    } while (sub.next(b));
  } while (box_.next(a));
  return out;
}

ComputationResult taylor_g(const Instance& instance, std::vector<std::size_t> box_upper) {
  const Population& pop = instance.population();
  if (box_upper.size() != pop.classes()) {
    throw Error(ErrorKind::DimensionMismatch, "truncation box has wrong dimension");
  }
  for (std::size_t j = 0; j < pop.classes(); ++j) {
    if (box_upper[j] < pop[j]) {
      throw Error(ErrorKind::IndexOutOfRange, "truncation box must contain N");
    }
  }
  ComputationResult result{Quantity::G, {}, Algorithm::Taylor, {}};
  TruncatedSeries acc = TruncatedSeries::one(box_upper);
  for (std::size_t i = 0; i < instance.stations(); ++i) {
    const auto factor = TruncatedSeries::geometric(box_upper, instance.theta().row(i));
    acc = acc.multiply(factor, &result.work.terms);
  }
  result.work.table_entries = acc.box().size();
  result.value = acc.coefficient(pop.counts());
  return result;
}

ComputationResult taylor_g(const Instance& instance) {
  const auto counts = instance.population().counts();
  return taylor_g(instance, std::vector<std::size_t>(counts.begin(), counts.end()));
}

ComputationResult monomial_integrate_j(const Instance& instance, std::uint64_t guard) {
  const ThetaMatrix& theta = instance.theta();
  const Population& pop = instance.population();
  const std::size_t n = instance.stations();
  const std::uint64_t monomials = binomial_saturating(pop.total() + n - 1, n - 1);
  if (monomials > guard) {
    throw Error(ErrorKind::ExpansionTooLarge, "expansion has up to " + std::to_string(monomials) +
                                                  " monomials, guard is " + std::to_string(guard));
  }

  using Poly = std::map<std::vector<std::size_t>, Rational>;
  Poly poly;
  poly.emplace(std::vector<std::size_t>(n, 0), Rational(1));
  for (std::size_t j = 0; j < pop.classes(); ++j) {
    for (std::size_t power = 0; power < pop[j]; ++power) {
      Poly next;
      for (const auto& [exps, coeff] : poly) {
        for (std::size_t i = 0; i < n; ++i) {
          if (theta(i, j).is_zero()) continue;
          auto e = exps;
          ++e[i];
          next[std::move(e)] += coeff * theta(i, j);
        }
      }
      poly = std::move(next);
    }
  }

  // ∫_Δ x^a dm = ∏ a_i! / (|a| + n - 1)!, all monomials share |a| = N.
  ComputationResult result{Quantity::J, {}, Algorithm::Monomial, {}};
  FactorialTable fact(pop.total() + n - 1);
  Rational sum;
  for (const auto& [exps, coeff] : poly) {
    if (coeff.is_zero()) continue;
    BigInt num(1);
    for (std::size_t a : exps) num *= fact.factorial(a);
    sum += coeff * Rational(num);
    ++result.work.terms;
  }
  result.value = sum / Rational(fact.factorial(pop.total() + n - 1));
  return result;
}

}  // namespace simplexint
