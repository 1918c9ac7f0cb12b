#include "uconf/power.hpp"

#include <stdexcept>
#include <vector>

namespace uconf {

namespace {

// Largest q with q*m <= limit componentwise; m != 0.
int max_multiple(const MultiIndex& m, const MultiIndex& limit) {
  int q = -1;
  for (int i = 0; i < m.vars(); ++i) {
    if (m[i] == 0) continue;
    int qi = limit[i] / m[i];
    q = (q < 0 || qi < q) ? qi : q;
  }
  return q;
}

// (1 - t^m)^e within the box, via the binomial series
// sum_q C(e, q) (-1)^q t^{qm}.  Exact for any integer e, including huge and
// negative ones; only the q*m <= bound terms exist in the box.
IntSeries binomial_factor(const MultiIndex& m, const BigInt& e, const DegreeBound& bound) {
  IntSeries f(bound);
  MultiIndex qm = MultiIndex::zero(bound.vars());
  const int q_max = max_multiple(m, bound.limit());
  for (int q = 0; q <= q_max; ++q) {
    BigInt c = binomial(e, q);
    if ((q & 1) != 0) c = -c;
    f.set(qm, std::move(c));
    if (q < q_max) qm = qm + m;
  }
  return f;
}

// Coefficients of prod_{i,j} (1 - u^i v^j X)^{s * p_ij} up to X^q_max, where
// X stands for t^m.  Each factor contributes its binomial expansion; the
// factors are convolved along the single X axis, which is cheap compared to
// a multiply over the full box.
std::vector<BivarPoly> charged_axis_coeffs(const BigInt& s, const BivarPoly& exponent,
                                           int q_max) {
  std::vector<BivarPoly> axis(static_cast<std::size_t>(q_max) + 1);
  axis[0] = BivarPoly(1);
  for (const auto& [uv, p_ij] : exponent.terms()) {
    const BigInt e = s * p_ij;
    if (is_zero(e)) continue;
    std::vector<BivarPoly> factor(static_cast<std::size_t>(q_max) + 1);
    for (int q = 0; q <= q_max; ++q) {
      BigInt c = binomial(e, q);
      if ((q & 1) != 0) c = -c;
      factor[static_cast<std::size_t>(q)] =
          BivarPoly::monomial(std::move(c), uv.first * q, uv.second * q);
    }
    std::vector<BivarPoly> next(static_cast<std::size_t>(q_max) + 1);
    for (int a = 0; a <= q_max; ++a) {
      if (axis[static_cast<std::size_t>(a)].is_zero()) continue;
      for (int b = 0; a + b <= q_max; ++b) {
        if (factor[static_cast<std::size_t>(b)].is_zero()) continue;
        next[static_cast<std::size_t>(a + b)] +=
            axis[static_cast<std::size_t>(a)] * factor[static_cast<std::size_t>(b)];
      }
    }
    axis = std::move(next);
  }
  return axis;
}

}  // namespace

Factorization factorize(const IntSeries& f) {
  if (!f.has_unit_constant_term()) {
    throw std::domain_error("factorize: constant term must be 1");
  }
  Factorization fac{f.bound(), {}};
  IntSeries residual = f;
  for (const MultiIndex& m : f.bound().indices_grlex()) {
    if (m.is_zero()) continue;
    BigInt s = -residual.at(m);
    if (is_zero(s)) continue;
    residual *= binomial_factor(m, -s, f.bound());
    fac.exponents.emplace(m, std::move(s));
  }
  return fac;
}

IntSeries expand(const Factorization& fac) {
  IntSeries result = IntSeries::one(fac.bound);
  for (const auto& [m, s] : fac.exponents) {
    check_same_vars(m, fac.bound.limit());
    if (m.is_zero()) throw std::invalid_argument("expand: zero multi-index in factorization");
    if (is_zero(s)) continue;
    result *= binomial_factor(m, s, fac.bound);
  }
  return result;
}

PolySeries pow(const IntSeries& base, const BivarPoly& exponent) {
  const Factorization fac = factorize(base);
  PolySeries result = PolySeries::one(base.bound());
  for (const auto& [m, s] : fac.exponents) {
    const int q_max = max_multiple(m, base.bound().limit());
    const std::vector<BivarPoly> axis = charged_axis_coeffs(s, exponent, q_max);
    PolySeries factor(base.bound());
    MultiIndex qm = MultiIndex::zero(base.vars());
    for (int q = 0; q <= q_max; ++q) {
      factor.set(qm, axis[static_cast<std::size_t>(q)]);
      if (q < q_max) qm = qm + m;
    }
    result *= factor;
  }
  return result;
}

BigInt stratum_count(std::int64_t space_points,
                     const std::map<MultiIndex, std::int64_t, GrlexLess>& state_sizes,
                     const MultiIndex& total_charge) {
  if (space_points < 0) throw std::invalid_argument("stratum_count: negative point count");
  std::vector<std::pair<MultiIndex, std::int64_t>> charges;
  for (const auto& [m, a] : state_sizes) {
    if (m.is_zero()) throw std::invalid_argument("stratum_count: zero charge not allowed");
    check_same_vars(m, total_charge);
    if (a < 0) throw std::invalid_argument("stratum_count: negative state count");
    if (a > 0) charges.emplace_back(m, a);
  }

  // Sum over particle families {k_m >= 0} with sum_m m*k_m = total_charge of
  //   C(N, k_1, k_2, ..., N - sum k_m) * prod a_m^{k_m},
  // the multinomial choosing which points carry which charge.
  BigInt total = 0;
  auto recurse = [&](auto&& self, std::size_t idx, const MultiIndex& remaining,
                     std::int64_t points_left, const BigInt& ways) -> void {
    if (idx == charges.size()) {
      if (remaining.is_zero()) total += ways;
      return;
    }
    const auto& [m, a] = charges[idx];
    MultiIndex rest = remaining;
    BigInt a_pow = 1;
    for (std::int64_t k = 0;; ++k) {
      if (k > 0) {
        if (!dominated_by(m, rest) || k > points_left) break;
        rest = rest - m;
        a_pow *= a;
      }
      // C(points_left, k) ways to pick this family's points among the rest.
      self(self, idx + 1, rest, points_left - k, ways * binomial(points_left, k) * a_pow);
    }
  };
  recurse(recurse, 0, total_charge, space_points, BigInt(1));
  return total;
}

}  // namespace uconf
