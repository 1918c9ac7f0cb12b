#pragma once

#include <cstdint>
#include <map>

#include "uconf/bigint.hpp"
#include "uconf/multi_index.hpp"
#include "uconf/poly.hpp"
#include "uconf/series.hpp"

namespace uconf {

/// The unique representation of an integer series with constant term 1 as
/// prod_{m != 0} (1 - t^m)^{s_m} within the box.  Only nonzero exponents are
/// stored.
struct Factorization {
  DegreeBound bound;
  std::map<MultiIndex, BigInt, GrlexLess> exponents;

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.bound == b.bound && a.exponents == b.exponents;
  }
};

/// Computes the product representation of f.  Multi-indices are processed in
/// graded-lex order: at step m the residual R (initially f, with all
/// grlex-smaller nonzero coefficients already cleared) determines
/// s_m = -[t^m] R, and R is replaced by R * (1 - t^m)^{-s_m}.
/// Requires constant term 1; exact and deterministic.
Factorization factorize(const IntSeries& f);

/// Expands prod (1 - t^m)^{s_m} within the box; inverse of factorize.
IntSeries expand(const Factorization& fac);

/// Raises an integer series with constant term 1 to a Z[u,v] exponent:
/// with f = prod (1 - t^m)^{s_m} and p = sum p_ij u^i v^j,
///
///   f^p = prod_m prod_{i,j} (1 - u^i v^j t^m)^{s_m * p_ij}.
///
/// The exponent sign is +s_m * p_ij: this is what makes f^1 = f, makes the
/// exponent additive (f^{p+q} = f^p f^q), and specializes at u = v = 1 to
/// integer exponentiation by p(1,1).
///
/// The base must have integer coefficients -- series with polynomial
/// coefficients are not accepted, which the signature enforces.
PolySeries pow(const IntSeries& base, const BivarPoly& exponent);

/// Counting model of the series power: the number of ways to place charged
/// particles on N distinguishable points (at most one particle per point),
/// where a particle of charge m has state_sizes.at(m) internal states, so
/// that charges total k.  Equals the coefficient of t^k in
/// (1 + sum_m state_sizes[m] t^m)^N.
BigInt stratum_count(std::int64_t space_points,
                     const std::map<MultiIndex, std::int64_t, GrlexLess>& state_sizes,
                     const MultiIndex& total_charge);

}  // namespace uconf
