#include "doctest.h"

#include "simplexint/core.hpp"
#include "simplexint/lattice.hpp"
#include "simplexint/oracles.hpp"
#include "simplexint/recurrences.hpp"
#include "support/family.hpp"

using namespace simplexint;
using simplexint::testing::make_instance;

namespace {

ErrorKind validate_error(const std::vector<std::vector<Rational>>& theta,
                         const std::vector<std::int64_t>& pop) {
  try {
    (void)validate(theta, pop);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("validate accepted invalid input");
  return ErrorKind::InvalidLiteral;
}

}  // namespace

TEST_CASE("validate") {
  const Instance ok = validate({{1}, {2}}, {2});
  CHECK(ok.stations() == 2);
  CHECK(ok.classes() == 1);
  CHECK(ok.population().total() == 2);

  CHECK(validate_error({{1, 1}, {2, 3}}, {1}) == ErrorKind::DimensionMismatch);
  CHECK(validate_error({{1}, {2}}, {-1}) == ErrorKind::NegativePopulation);
  CHECK(validate_error({{}, {}}, {}) == ErrorKind::EmptyClasses);
  CHECK(validate_error({{}}, {1}) == ErrorKind::EmptyClasses);
  CHECK(validate_error({}, {1}) == ErrorKind::EmptyStations);
  CHECK(validate_error({{1, 2}, {3}}, {1, 1}) == ErrorKind::DimensionMismatch);
}

TEST_CASE("population decrement") {
  const Population p({2, 0});
  CHECK(p.decrement(0) == Population({1, 0}));
  CHECK(p.total() == 2);
  CHECK_THROWS_AS(p.decrement(1), Error);
}

TEST_CASE("g_to_j and j_to_g") {
  const auto i1 = make_instance({{1}, {2}}, {2});
  CHECK(g_to_j(7, i1) == Rational(7, 3));
  CHECK(j_to_g(Rational(7, 3), i1) == Rational(7));

  const auto i2 = make_instance({{1}, {2}, {3}}, {0});
  CHECK(g_to_j(1, i2) == Rational(1, 2));
  CHECK(j_to_g(Rational(1, 2), i2) == Rational(1));

  const auto i3 = make_instance({{1, 1}, {2, 3}}, {1, 1});
  CHECK(g_to_j(19, i3) == Rational(19, 6));

  const auto i4 = make_instance({{1}, {-1}}, {2});
  CHECK(j_to_g(Rational(1, 3), i4) == Rational(1));
}

TEST_CASE("remove_row and append_row") {
  const ThetaMatrix two(1, {{1}, {2}});
  CHECK(remove_row(two, 1) == ThetaMatrix(1, {{1}}));
  const ThetaMatrix one(1, {{1}});
  const ThetaMatrix none = remove_row(one, 0);
  CHECK(none.rows() == 0);
  CHECK(none.empty());
  CHECK(remove_row(ThetaMatrix(2, {{1, 1}, {2, 3}}), 0) == ThetaMatrix(2, {{2, 3}}));
  CHECK_THROWS_AS(remove_row(two, 2), Error);

  const std::vector<Rational> r2{2};
  CHECK(append_row(one, r2) == two);
  const std::vector<Rational> r5{5};
  CHECK(append_row(ThetaMatrix(0, 1), r5) == ThetaMatrix(1, {{5}}));
  const std::vector<Rational> r23{2, 3};
  CHECK(append_row(ThetaMatrix(2, {{1, 1}}), r23) == ThetaMatrix(2, {{1, 1}, {2, 3}}));
  try {
    (void)append_row(one, r23);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("property: conversion round trip and append/remove identity") {
  const auto family = simplexint::testing::desk_family(11, 60);
  cli::InstanceGenerator gen(12);
  for (const auto& inst : family) {
    const Rational v = gen.scalar({});
    CHECK(j_to_g(g_to_j(v, inst), inst) == v);
    CHECK(g_to_j(j_to_g(v, inst), inst) == v);

    const ThetaMatrix& theta = inst.theta();
    std::vector<Rational> row(theta.cols());
    for (auto& x : row) x = gen.scalar({});
    const ThetaMatrix grown = append_row(theta, row);
    CHECK(remove_row(grown, theta.rows()) == theta);
  }
}

TEST_CASE("property: g_to_j(G) equals direct monomial integration") {
  // Every shape n in 1..4, d in 1..3, with population vectors drawn in 0..5.
  cli::InstanceGenerator gen(5);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t d = 1; d <= 3; ++d) {
      for (int rep = 0; rep < 6; ++rep) {
        std::vector<std::size_t> pop(d);
        for (auto& nj : pop) nj = gen.uniform(0, 5);
        const Instance inst = gen.instance(n, pop, {});
        CAPTURE(n);
        CAPTURE(d);
        CHECK(g_to_j(convolution_g(inst).value, inst) == monomial_integrate_j(inst).value);
      }
    }
  }
}

TEST_CASE("box and composition iteration") {
  const Box box({1, 2});
  CHECK(box.size() == 6);
  std::vector<std::size_t> m(2, 0);
  std::size_t seen = 1;
  while (box.next(m)) {
    CHECK(box.index(m) == seen);
    ++seen;
  }
  CHECK(seen == 6);

  std::vector<std::size_t> parts{3, 0, 0};
  std::size_t count = 1;
  while (next_composition(parts)) ++count;
  CHECK(count == 10);  // C(5, 2)
  CHECK(parts == std::vector<std::size_t>{0, 0, 3});
}
