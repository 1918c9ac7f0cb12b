#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "test_util.hpp"
#include "uconf/exotic.hpp"
#include "uconf/power.hpp"

using uconf::BigInt;
using uconf::ColorCountSet;
using uconf::DegreeBound;
using uconf::IntSeries;
using uconf::MultiIndex;

namespace {

bool same_membership(const ColorCountSet& a, const ColorCountSet& b, const DegreeBound& bound) {
  for (const MultiIndex& c : bound.indices()) {
    if (a.contains(c) != b.contains(c)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("membership") {
  ColorCountSet axes = uconf::apartheid_set(2);
  CHECK(axes.contains(MultiIndex{3, 0}));
  CHECK(axes.contains(MultiIndex{0, 5}));
  CHECK_FALSE(axes.contains(MultiIndex{1, 1}));
  CHECK(axes.contains(MultiIndex::zero(2)));

  ColorCountSet nested = uconf::nested_set(3);
  CHECK(nested.contains(MultiIndex{1, 2, 2}));
  CHECK_FALSE(nested.contains(MultiIndex{2, 1, 2}));
  CHECK(nested.contains(MultiIndex::zero(3)));

  ColorCountSet caps = ColorCountSet::max_counts({2, 3});
  CHECK(caps.contains(MultiIndex{1, 2}));
  CHECK_FALSE(caps.contains(MultiIndex{2, 0}));

  CHECK(uconf::simple_set().contains(MultiIndex{1}));
  CHECK_FALSE(uconf::simple_set().contains(MultiIndex{2}));

  CHECK_THROWS_AS(axes.contains(MultiIndex{1}), std::invalid_argument);
}

TEST_CASE("construction validates membership of 0") {
  CHECK_THROWS_AS(ColorCountSet::explicit_set({MultiIndex{1}, MultiIndex{2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ColorCountSet::max_counts({0}), std::invalid_argument);
  CHECK_THROWS_AS(ColorCountSet::max_counts({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(uconf::no_m_equal_set(1), std::invalid_argument);
  CHECK_NOTHROW(uconf::no_m_equal_set(2));
}

TEST_CASE("color count series") {
  const DegreeBound b5 = DegreeBound::uniform(1, 5);
  IntSeries simple = color_count_series(uconf::simple_set(), b5);
  CHECK(simple.at(MultiIndex{0}) == 1);
  CHECK(simple.at(MultiIndex{1}) == 1);
  CHECK(simple.at(MultiIndex{2}) == 0);
  CHECK(simple.at(MultiIndex{5}) == 0);

  const DegreeBound b4 = DegreeBound::uniform(1, 4);
  IntSeries sym = color_count_series(uconf::symmetric_set(), b4);
  for (int k = 0; k <= 4; ++k) CHECK(sym.at(MultiIndex{k}) == 1);

  IntSeries no3 = color_count_series(uconf::no_m_equal_set(3), b5);
  CHECK(no3.at(MultiIndex{0}) == 1);
  CHECK(no3.at(MultiIndex{1}) == 1);
  CHECK(no3.at(MultiIndex{2}) == 1);
  CHECK(no3.at(MultiIndex{3}) == 0);
  CHECK(no3.at(MultiIndex{4}) == 0);
}

TEST_CASE("constant term is always 1") {
  const DegreeBound b33 = DegreeBound::uniform(2, 3);
  for (const ColorCountSet& set :
       {uconf::apartheid_set(2), uconf::nested_set(2), ColorCountSet::max_counts({2, 2}),
        ColorCountSet::explicit_set({MultiIndex{0, 0}, MultiIndex{1, 2}})}) {
    CHECK(color_count_series(set, b33).has_unit_constant_term());
  }
}

TEST_CASE("named sets") {
  const DegreeBound b6 = DegreeBound::uniform(1, 6);
  // no_m_equal(2) has the same members as the plain configuration set
  CHECK(same_membership(uconf::no_m_equal_set(2), uconf::simple_set(), b6));
  // the chain and one-axis conditions are vacuous for one color
  CHECK(same_membership(uconf::nested_set(1), uconf::symmetric_set(), b6));
  CHECK(same_membership(uconf::apartheid_set(1), uconf::symmetric_set(), b6));
  // a cap beyond the box is invisible within it
  CHECK(color_count_series(uconf::no_m_equal_set(9), b6) ==
        color_count_series(uconf::symmetric_set(), b6));
}

TEST_CASE("product representations of the named series") {
  using uconf::Factorization;
  const DegreeBound b8 = DegreeBound::uniform(1, 8);

  CHECK(factorize(color_count_series(uconf::simple_set(), b8)).exponents ==
        Factorization{b8, {{MultiIndex{1}, BigInt(-1)}, {MultiIndex{2}, BigInt(1)}}}.exponents);
  CHECK(factorize(color_count_series(uconf::symmetric_set(), b8)).exponents ==
        Factorization{b8, {{MultiIndex{1}, BigInt(-1)}}}.exponents);
  CHECK(factorize(color_count_series(uconf::no_m_equal_set(4), b8)).exponents ==
        Factorization{b8, {{MultiIndex{1}, BigInt(-1)}, {MultiIndex{4}, BigInt(1)}}}.exponents);

  const DegreeBound b44 = DegreeBound::uniform(2, 4);
  CHECK(factorize(color_count_series(uconf::apartheid_set(2), b44)).exponents ==
        Factorization{b44,
                      {{MultiIndex{1, 0}, BigInt(-1)},
                       {MultiIndex{0, 1}, BigInt(-1)},
                       {MultiIndex{1, 1}, BigInt(1)}}}
            .exponents);
  // nested chains: sum over c1 <= c2 factors as two geometric series
  CHECK(factorize(color_count_series(uconf::nested_set(2), b44)).exponents ==
        Factorization{b44, {{MultiIndex{0, 1}, BigInt(-1)}, {MultiIndex{1, 1}, BigInt(-1)}}}
            .exponents);
}
