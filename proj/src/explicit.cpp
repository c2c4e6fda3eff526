#include "simplexint/explicit.hpp"

#include <algorithm>
#include <string>

#include "simplexint/combinatorics.hpp"
#include "simplexint/lattice.hpp"
#include "simplexint/recurrences.hpp"

namespace simplexint {

namespace {

std::string format_vector(std::span<const std::size_t> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

[[noreturn]] void degenerate(std::span<const std::size_t> t, std::size_t i, std::size_t k) {
  throw Error(ErrorKind::DegenerateDenominator,
              "aggregate difference vanished at t=" + format_vector(t) + " between nodes " +
                  std::to_string(i) + " and " + std::to_string(k) +
                  "; fall back to convolution");
}

void require_single_class(const Instance& instance, std::string_view algorithm) {
  if (instance.classes() != 1) {
    throw Error(ErrorKind::WrongClassCount, std::string(algorithm) + " requires d = 1, got d = " +
                                                std::to_string(instance.classes()));
  }
}

Rational sign_power(std::size_t e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

// [a_1, ..., a_n] x^degree for pairwise distinct nodes. A coincident pair
// is reported in the result rather than thrown so callers can attach t.
struct DistinctDD {
  Rational value;
  bool ok = true;
  std::size_t i = 0, k = 0;
};

DistinctDD distinct_divided_difference(std::span<const Rational> nodes, std::size_t degree,
                                       bool reversed, std::uint64_t& terms) {
  DistinctDD out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Rational den(1);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (k == i) continue;
      Rational diff = reversed ? nodes[k] - nodes[i] : nodes[i] - nodes[k];
      if (diff.is_zero()) {
        out.ok = false;
        out.i = std::min(i, k);
        out.k = std::max(i, k);
        return out;
      }
      den *= diff;
    }
    out.value += nodes[i].pow(degree) / den;
    ++terms;
  }
  return out;
}

// Divided difference of x^{total + n - 1} on nodes a_j repeated m_j times:
//   Σ_j (-1)^{m_j-1} a_j^{total+n-m_j}
//     Σ_{|r| = m_j-1} (-1)^{r_j} C(total+r_j, r_j)
//       ∏_{k≠j} C(m_k+r_k-1, r_k) a_k^{r_k} / (a_j - a_k)^{m_k+r_k}
// r ranges over all groups, r_j included.
DistinctDD grouped_divided_difference(std::span<const Rational> nodes,
                                      std::span<const std::size_t> mult, std::size_t total,
                                      std::size_t n, FactorialTable& fact,
                                      std::uint64_t& terms) {
  DistinctDD out;
  const std::size_t groups = nodes.size();
  std::vector<Rational> diff(groups * groups);
  for (std::size_t j = 0; j < groups; ++j) {
    for (std::size_t k = 0; k < groups; ++k) {
      if (j == k) continue;
      diff[j * groups + k] = nodes[j] - nodes[k];
      if (diff[j * groups + k].is_zero()) {
        out.ok = false;
        out.i = std::min(j, k);
        out.k = std::max(j, k);
        return out;
      }
    }
  }

  std::vector<std::size_t> r(groups);
  for (std::size_t j = 0; j < groups; ++j) {
    const std::size_t mj = mult[j];
    std::fill(r.begin(), r.end(), 0);
    r[0] = mj - 1;
    Rational inner;
    do {
      Rational term = sign_power(r[j]) * Rational(fact.binomial(total + r[j], r[j]));
      for (std::size_t k = 0; k < groups; ++k) {
        if (k == j) continue;
        term *= Rational(fact.binomial(mult[k] + r[k] - 1, r[k]));
        term *= nodes[k].pow(r[k]);
        term /= diff[j * groups + k].pow(mult[k] + r[k]);
      }
      inner += term;
      ++terms;
    } while (next_composition(r));
    out.value += sign_power(mj - 1) * nodes[j].pow(total + n - mj) * inner;
  }
  return out;
}

// (-1)^{N-t} ∏_j C(N_j, t_j) / ∏_j N_j!
Rational box_weight(const Population& pop, std::span<const std::size_t> t, FactorialTable& fact) {
  std::size_t t_sum = 0;
  BigInt num(1);
  BigInt den(1);
  for (std::size_t j = 0; j < pop.classes(); ++j) {
    t_sum += t[j];
    num *= fact.binomial(pop[j], t[j]);
    den *= fact.factorial(pop[j]);
  }
  return sign_power(pop.total() - t_sum) * Rational(num, den);
}

// Σ_j t_j θ_ij for every row of `rows`.
std::vector<Rational> aggregate_nodes(const ThetaMatrix& rows, std::span<const std::size_t> t) {
  std::vector<Rational> a(rows.rows());
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    for (std::size_t j = 0; j < rows.cols(); ++j) {
      if (t[j] != 0) a[i] += Rational(static_cast<long>(t[j])) * rows(i, j);
    }
  }
  return a;
}

std::vector<Rational> column(const ThetaMatrix& theta, std::size_t j) {
  std::vector<Rational> c(theta.rows());
  for (std::size_t i = 0; i < theta.rows(); ++i) c[i] = theta(i, j);
  return c;
}

void require_distinct(const Instance& instance) {
  const auto groups = group_coefficients(instance.theta());
  if (groups.groups() != instance.stations()) {
    throw Error(ErrorKind::RepeatedCoefficients,
                "koe58 requires pairwise distinct coefficients; use algorithm \"gen\" for "
                "repeated coefficients");
  }
}

}  // namespace

CoefficientGroups group_coefficients(const ThetaMatrix& theta) {
  auto folded = fold_rows(theta);
  return {std::move(folded.base), std::move(folded.mult)};
}

ComputationResult koe58_g(const Instance& instance) {
  require_single_class(instance, "koe58");
  require_distinct(instance);
  ComputationResult result{Quantity::G, {}, Algorithm::Koe58, {}};
  const auto nodes = column(instance.theta(), 0);
  const std::size_t degree = instance.population().total() + instance.stations() - 1;
  result.value = distinct_divided_difference(nodes, degree, false, result.work.terms).value;
  return result;
}

Rational koe58_reversed_denominator(const Instance& instance) {
  require_single_class(instance, "koe58");
  require_distinct(instance);
  const auto nodes = column(instance.theta(), 0);
  const std::size_t degree = instance.population().total() + instance.stations() - 1;
  std::uint64_t terms = 0;
  return distinct_divided_difference(nodes, degree, true, terms).value;
}

ComputationResult gen_g(const Instance& instance) {
  require_single_class(instance, "gen");
  ComputationResult result{Quantity::G, {}, Algorithm::Gen, {}};
  const auto groups = group_coefficients(instance.theta());
  const auto nodes = column(groups.distinct, 0);
  const std::size_t total = instance.population().total();
  FactorialTable fact(total + instance.stations());
  // Nodes are distinct by construction, so the result is always ok.
  result.value = grouped_divided_difference(nodes, groups.mult, total, instance.stations(), fact,
                                            result.work.terms)
                     .value;
  return result;
}

ComputationResult explicit1_g(const Instance& instance) {
  ComputationResult result{Quantity::G, {}, Algorithm::Explicit1, {}};
  const Population& pop = instance.population();
  const std::size_t n = instance.stations();
  // The t = 0 corner is 0^{N+n-1}/0; it is taken as 0 for N >= 1 and the
  // whole sum is 1 for N = 0. It still counts as n terms.
  result.work.terms += n;
  if (pop.is_zero()) {
    result.value = 1;
    return result;
  }
  const std::size_t degree = pop.total() + n - 1;
  FactorialTable fact(pop.total());
  const Box box(std::vector<std::size_t>(pop.counts().begin(), pop.counts().end()));
  std::vector<std::size_t> t(pop.classes(), 0);
  while (box.next(t)) {
    const auto nodes = aggregate_nodes(instance.theta(), t);
    const auto dd = distinct_divided_difference(nodes, degree, false, result.work.terms);
    if (!dd.ok) degenerate(t, dd.i, dd.k);
    result.value += box_weight(pop, t, fact) * dd.value;
  }
  return result;
}

ComputationResult explicit_repeated_g(const Instance& instance) {
  ComputationResult result{Quantity::G, {}, Algorithm::ExplicitRepeated, {}};
  const Population& pop = instance.population();
  if (pop.is_zero()) {
    result.value = 1;
    return result;
  }
  const std::size_t n = instance.stations();
  const auto groups = group_coefficients(instance.theta());
  FactorialTable fact(pop.total() + n);
  const Box box(std::vector<std::size_t>(pop.counts().begin(), pop.counts().end()));
  std::vector<std::size_t> t(pop.classes(), 0);
  while (box.next(t)) {
    const auto nodes = aggregate_nodes(groups.distinct, t);
    const auto dd =
        grouped_divided_difference(nodes, groups.mult, pop.total(), n, fact, result.work.terms);
    if (!dd.ok) degenerate(t, dd.i, dd.k);
    result.value += box_weight(pop, t, fact) * dd.value;
  }
  return result;
}

ComputationResult explicit2_g(const Instance& instance) {
  ComputationResult result{Quantity::G, {}, Algorithm::Explicit2, {}};
  const ThetaMatrix& theta = instance.theta();
  const Population& pop = instance.population();
  const std::size_t n = instance.stations();
  const std::size_t d = instance.classes();
  const std::size_t total = pop.total();
  FactorialTable fact(total + n);

  std::vector<std::size_t> h(n);
  std::vector<Rational> form(d);
  Rational sum;
  for (std::size_t s = 0; s <= total; ++s) {
    const Rational weight = sign_power(total - s) * Rational(fact.binomial(total + n - 1, total - s));
    std::fill(h.begin(), h.end(), 0);
    h[0] = s;
    do {
      Rational term = weight;
      for (std::size_t j = 0; j < d && !term.is_zero(); ++j) {
        Rational lin;
        for (std::size_t i = 0; i < n; ++i) {
          if (h[i] != 0) lin += Rational(static_cast<long>(h[i])) * theta(i, j);
        }
        term *= lin.pow(pop[j]);
      }
      sum += term;
      ++result.work.terms;
    } while (next_composition(h));
  }
  BigInt den(1);
  for (std::size_t nj : pop.counts()) den *= fact.factorial(nj);
  result.value = sum / Rational(den);
  return result;
}

}  // namespace simplexint
