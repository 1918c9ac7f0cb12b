#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "test_util.hpp"
#include "uconf/series.hpp"

using uconf::BigInt;
using uconf::DegreeBound;
using uconf::IntSeries;
using uconf::MultiIndex;

namespace {

// Small literal builder for r=1.
IntSeries s1(const DegreeBound& bound, std::initializer_list<int> coeffs) {
  IntSeries f(bound);
  int k = 0;
  for (int c : coeffs) f.set(MultiIndex{k++}, c);
  return f;
}

}  // namespace

TEST_CASE("addition") {
  const DegreeBound b3 = DegreeBound::uniform(1, 3);
  CHECK(s1(b3, {1, 1}) + s1(b3, {1, -1}) == s1(b3, {2}));
  IntSeries f = s1(b3, {3, 0, -2, 5});
  CHECK(f + IntSeries(b3) == f);

  const DegreeBound b22 = DegreeBound::uniform(2, 2);
  IntSeries g(b22), h(b22), sum(b22);
  g.set({0, 0}, 1);
  g.set({1, 0}, 1);
  h.set({0, 1}, 1);
  sum.set({0, 0}, 1);
  sum.set({1, 0}, 1);
  sum.set({0, 1}, 1);
  CHECK(g + h == sum);
}

TEST_CASE("multiplication") {
  const DegreeBound b3 = DegreeBound::uniform(1, 3);
  CHECK(s1(b3, {1, 1}) * s1(b3, {1, 1}) == s1(b3, {1, 2, 1}));
  // telescoping product is exactly 1 within the box
  CHECK(s1(b3, {1, -1}) * s1(b3, {1, 1, 1, 1}) == IntSeries::one(b3));

  const DegreeBound b11 = DegreeBound::uniform(2, 1);
  IntSeries f(b11), g(b11), fg(b11);
  f.set({0, 0}, 1);
  f.set({1, 0}, 1);
  g.set({0, 0}, 1);
  g.set({0, 1}, 1);
  fg.set({0, 0}, 1);
  fg.set({1, 0}, 1);
  fg.set({0, 1}, 1);
  fg.set({1, 1}, 1);
  CHECK(f * g == fg);
}

TEST_CASE("bound and arity mismatches are rejected") {
  IntSeries f(DegreeBound::uniform(1, 3));
  IntSeries g(DegreeBound::uniform(1, 4));
  IntSeries h(DegreeBound::uniform(2, 3));
  CHECK_THROWS_AS(f + g, std::invalid_argument);
  CHECK_THROWS_AS(f * g, std::invalid_argument);
  CHECK_THROWS_AS(f + h, std::invalid_argument);
}

TEST_CASE("inverse") {
  const DegreeBound b5 = DegreeBound::uniform(1, 5);
  CHECK(s1(b5, {1, -1}).inverse() == s1(b5, {1, 1, 1, 1, 1, 1}));
  CHECK(IntSeries::one(b5).inverse() == IntSeries::one(b5));
  CHECK(s1(b5, {1, 1}).inverse() == s1(b5, {1, -1, 1, -1, 1, -1}));
  CHECK_THROWS_AS(s1(b5, {2, 1}).inverse(), std::domain_error);
  CHECK_THROWS_AS(s1(b5, {0, 1}).inverse(), std::domain_error);
}

TEST_CASE("integer powers") {
  const DegreeBound b3 = DegreeBound::uniform(1, 3);
  IntSeries f = s1(b3, {1, 1});
  CHECK(pow(f, 2) == s1(b3, {1, 2, 1}));
  CHECK(pow(f, -1) == s1(b3, {1, -1, 1, -1}));
  CHECK(pow(f, 0) == IntSeries::one(b3));
  CHECK(pow(s1(b3, {2, 1}), 0) == IntSeries::one(b3));
  CHECK_THROWS_AS(pow(s1(b3, {2, 1}), -1), std::domain_error);

  // large exponents stay exact: [t] (1+t)^1000 = 1000, [t^2] = C(1000,2)
  IntSeries big = pow(f, 1000);
  CHECK(big.at(MultiIndex{1}) == 1000);
  CHECK(big.at(MultiIndex{2}) == 499500);
}

TEST_CASE("multiplication is associative and commutative") {
  testutil::Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int r = 1 + trial % 2;
    const DegreeBound bound = DegreeBound::uniform(r, r == 1 ? 6 : 3);
    IntSeries f = testutil::random_series(rng, bound);
    IntSeries g = testutil::random_series(rng, bound);
    IntSeries h = testutil::random_series(rng, bound);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("inverse roundtrip") {
  testutil::Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const int r = 1 + trial % 2;
    const DegreeBound bound = DegreeBound::uniform(r, r == 1 ? 7 : 3);
    IntSeries f = testutil::random_series(rng, bound, 3, /*unit_constant=*/true);
    CHECK(f * f.inverse() == IntSeries::one(bound));
    CHECK(f.inverse().inverse() == f);
  }
}

TEST_CASE("pow is additive in the exponent") {
  testutil::Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const DegreeBound bound = DegreeBound::uniform(1 + trial % 2, 3);
    IntSeries f = testutil::random_series(rng, bound, 2, /*unit_constant=*/true);
    const int a = testutil::rand_int(rng, -6, 6);
    const int b = testutil::rand_int(rng, -6, 6);
    CHECK(pow(f, a + b) == pow(f, a) * pow(f, b));
  }
}
