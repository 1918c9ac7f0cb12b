#include "uconf/series.hpp"

namespace uconf {

PolySeries to_poly_series(const IntSeries& f) {
  PolySeries g(f.bound());
  const auto indices = f.bound().indices();
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const BigInt& c = f.coeffs()[i];
    if (!is_zero(c)) g.set(indices[i], BivarPoly(c));
  }
  return g;
}

IntSeries eval_ones(const PolySeries& f) {
  IntSeries g(f.bound());
  const auto indices = f.bound().indices();
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const BivarPoly& c = f.coeffs()[i];
    if (!c.is_zero()) g.set(indices[i], c.eval(1, 1));
  }
  return g;
}

}  // namespace uconf
