#include "simplexint/recurrences.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "simplexint/lattice.hpp"

namespace simplexint {

std::size_t RowMultiplicity::effective_rows() const {
  return std::accumulate(mult.begin(), mult.end(), std::size_t{0});
}

RowMultiplicity fold_rows(const ThetaMatrix& theta) {
  std::vector<std::size_t> first_of;  // representative input row per group
  std::vector<std::size_t> mult;
  for (std::size_t i = 0; i < theta.rows(); ++i) {
    const auto row = theta.row(i);
    bool found = false;
    for (std::size_t g = 0; g < first_of.size(); ++g) {
      const auto rep = theta.row(first_of[g]);
      if (std::equal(row.begin(), row.end(), rep.begin())) {
        ++mult[g];
        found = true;
        break;
      }
    }
    if (!found) {
      first_of.push_back(i);
      mult.push_back(1);
    }
  }
  ThetaMatrix base(first_of.size(), theta.cols());
  for (std::size_t g = 0; g < first_of.size(); ++g) {
    for (std::size_t j = 0; j < theta.cols(); ++j) base(g, j) = theta(first_of[g], j);
  }
  return {std::move(base), std::move(mult)};
}

ComputationResult convolution_g(const Instance& instance) {
  const ThetaMatrix& theta = instance.theta();
  const Population& pop = instance.population();
  const std::size_t d = pop.classes();
  const Box box(std::vector<std::size_t>(pop.counts().begin(), pop.counts().end()));

  ComputationResult result;
  result.quantity = Quantity::G;
  result.algorithm = Algorithm::Convolution;

  // Layer i = 0 is the empty matrix: G(∅, m) = 0 except G(·, 0) = 1.
  std::vector<Rational> prev(box.size());
  prev[0] = 1;
  result.work.table_entries += box.size();

  std::vector<Rational> cur(box.size());
  std::vector<std::size_t> m(d, 0);
  for (std::size_t i = 0; i < theta.rows(); ++i) {
    std::fill(m.begin(), m.end(), 0);
    std::size_t idx = 0;
    do {
      Rational cell = prev[idx];
      for (std::size_t j = 0; j < d; ++j) {
        if (m[j] == 0 || theta(i, j).is_zero()) continue;
        cell += theta(i, j) * cur[idx - box.stride(j)];
      }
      cur[idx] = std::move(cell);
      ++idx;
    } while (box.next(m));
    result.work.table_entries += box.size();
    std::swap(prev, cur);
  }
  result.value = prev[box.size() - 1];
  return result;
}

ComputationResult recal_g(const Instance& instance) {
  const Population& pop = instance.population();
  const RowMultiplicity start = fold_rows(instance.theta());
  const ThetaMatrix& base = start.base;
  const std::size_t rows = base.rows();
  const std::size_t total = pop.total();

  // Step l removes one job of class step_class[l]; remaining[l] is N_c just
  // before that step. Classes go d, d-1, ..., 1 and zero counts are skipped.
  std::vector<std::size_t> step_class;
  std::vector<std::size_t> remaining;
  step_class.reserve(total);
  remaining.reserve(total);
  for (std::size_t c = pop.classes(); c-- > 0;) {
    for (std::size_t left = pop[c]; left >= 1; --left) {
      step_class.push_back(c);
      remaining.push_back(left);
    }
  }

  using Level = std::map<std::vector<std::size_t>, Rational>;
  std::vector<Level> levels(total + 1);
  levels[0].emplace(start.mult, Rational{});
  for (std::size_t l = 0; l < total; ++l) {
    const std::size_t c = step_class[l];
    for (const auto& [mult, unused] : levels[l]) {
      for (std::size_t r = 0; r < rows; ++r) {
        if (base(r, c).is_zero()) continue;
        auto grown = mult;
        ++grown[r];
        levels[l + 1].try_emplace(std::move(grown));
      }
    }
  }

  ComputationResult result;
  result.quantity = Quantity::G;
  result.algorithm = Algorithm::Recal;

  for (auto& [mult, value] : levels[total]) value = 1;
  result.work.table_entries += levels[total].size();
  for (std::size_t l = total; l-- > 0;) {
    const std::size_t c = step_class[l];
    const Rational inv_count(1L, static_cast<long>(remaining[l]));
    for (auto& [mult, value] : levels[l]) {
      Rational sum;
      auto grown = mult;
      for (std::size_t r = 0; r < rows; ++r) {
        if (base(r, c).is_zero()) continue;
        ++grown[r];
        sum += Rational(static_cast<long>(mult[r])) * base(r, c) * levels[l + 1].at(grown);
        --grown[r];
      }
      value = sum * inv_count;
    }
    result.work.table_entries += levels[l].size();
    levels[l + 1].clear();
  }
  result.value = levels[0].begin()->second;
  return result;
}

}  // namespace simplexint
