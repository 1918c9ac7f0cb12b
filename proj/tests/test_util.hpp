#pragma once

#include <random>
#include <vector>

#include "uconf/multi_index.hpp"
#include "uconf/poly.hpp"
#include "uconf/power.hpp"
#include "uconf/series.hpp"

namespace testutil {

using Rng = std::mt19937;

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline uconf::BivarPoly random_poly(Rng& rng, int max_deg = 2, int max_abs = 3) {
  uconf::BivarPoly p;
  for (int i = 0; i <= max_deg; ++i) {
    for (int j = 0; j <= max_deg; ++j) {
      int c = rand_int(rng, -max_abs, max_abs);
      if (c != 0) p += uconf::BivarPoly::monomial(c, i, j);
    }
  }
  return p;
}

inline uconf::IntSeries random_series(Rng& rng, const uconf::DegreeBound& bound, int max_abs = 3,
                                      bool unit_constant = false) {
  uconf::IntSeries f(bound);
  for (const uconf::MultiIndex& k : bound.indices()) {
    f.set(k, uconf::BigInt(rand_int(rng, -max_abs, max_abs)));
  }
  if (unit_constant) f.set(uconf::MultiIndex::zero(bound.vars()), 1);
  return f;
}

inline uconf::Factorization random_factorization(Rng& rng, const uconf::DegreeBound& bound,
                                                 int max_abs = 3) {
  uconf::Factorization fac{bound, {}};
  for (const uconf::MultiIndex& m : bound.indices()) {
    if (m.is_zero()) continue;
    if (rand_int(rng, 0, 2) == 0) continue;  // leave some exponents zero
    int s = rand_int(rng, -max_abs, max_abs);
    if (s != 0) fac.exponents.emplace(m, uconf::BigInt(s));
  }
  return fac;
}

// 1 + t_i + t_i^2 + ... for variable `var` of the box.
inline uconf::IntSeries geometric_series(const uconf::DegreeBound& bound, int var) {
  uconf::IntSeries f(bound);
  std::vector<int> k(static_cast<std::size_t>(bound.vars()), 0);
  for (int q = 0; q <= bound.limit()[var]; ++q) {
    k[static_cast<std::size_t>(var)] = q;
    f.set(uconf::MultiIndex(k), 1);
  }
  return f;
}

}  // namespace testutil
