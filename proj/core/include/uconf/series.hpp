#pragma once

#include <ostream>
#include <utility>
#include <vector>

#include "uconf/bigint.hpp"
#include "uconf/multi_index.hpp"
#include "uconf/poly.hpp"

namespace uconf {

/// A formal power series in t_1..t_r truncated to a box of multidegrees:
/// every coefficient with k <= bound (componentwise) is stored and exact.
///
/// Box truncation is closed under convolution -- the coefficient of t^k in a
/// product depends only on indices <= k -- so no operation here introduces
/// approximation error.
///
/// Coeff is an exact ring value type: BigInt or BivarPoly.
template <typename Coeff>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(DegreeBound bound)
      : bound_(std::move(bound)), coeffs_(bound_.box_size(), Coeff(0)) {}

  static TruncatedSeries one(const DegreeBound& bound) {
    TruncatedSeries s(bound);
    s.coeffs_[0] = Coeff(1);
    return s;
  }
  static TruncatedSeries constant(const DegreeBound& bound, Coeff value) {
    TruncatedSeries s(bound);
    s.coeffs_[0] = std::move(value);
    return s;
  }

  int vars() const { return bound_.vars(); }
  const DegreeBound& bound() const { return bound_; }

  const Coeff& at(const MultiIndex& k) const { return coeffs_[bound_.flat_index(k)]; }
  void set(const MultiIndex& k, Coeff value) { coeffs_[bound_.flat_index(k)] = std::move(value); }

  const Coeff& constant_term() const { return coeffs_[0]; }
  bool has_unit_constant_term() const { return coeffs_[0] == Coeff(1); }

  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  friend bool operator==(const TruncatedSeries& f, const TruncatedSeries& g) {
    return f.bound_ == g.bound_ && f.coeffs_ == g.coeffs_;
  }
  friend bool operator!=(const TruncatedSeries& f, const TruncatedSeries& g) { return !(f == g); }

  TruncatedSeries& operator+=(const TruncatedSeries& g) {
    check_same_bound(bound_, g.bound_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += g.coeffs_[i];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries f, const TruncatedSeries& g) { return f += g; }

  /// Convolution within the box; skips zero coefficients on both sides.
  friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
    check_same_bound(f.bound_, g.bound_);
    const auto indices = f.bound_.indices();
    const int r = f.vars();
    const MultiIndex& limit = f.bound_.limit();

    // Nonzero support of g, with flat offsets (row-major offsets add).
    std::vector<std::size_t> g_support;
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) {
      if (!is_zero(g.coeffs_[i])) g_support.push_back(i);
    }

    TruncatedSeries result(f.bound_);
    for (std::size_t a = 0; a < f.coeffs_.size(); ++a) {
      if (is_zero(f.coeffs_[a])) continue;
      for (std::size_t b : g_support) {
        bool inside = true;
        for (int i = 0; i < r; ++i) {
          if (indices[a][i] + indices[b][i] > limit[i]) {
            inside = false;
            break;
          }
        }
        if (inside) result.coeffs_[a + b] += f.coeffs_[a] * g.coeffs_[b];
      }
    }
    return result;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& g) { return *this = *this * g; }

  /// Multiplicative inverse within the box, by graded recursion
  /// g_k = -sum_{0 < l <= k} f_l g_{k-l}.  Requires constant term 1.
  TruncatedSeries inverse() const;

 private:
  DegreeBound bound_;
  std::vector<Coeff> coeffs_;  // dense over the box, row-major
};

template <typename Coeff>
TruncatedSeries<Coeff> TruncatedSeries<Coeff>::inverse() const {
  if (!has_unit_constant_term()) {
    throw std::domain_error("series inverse: constant term must be 1");
  }
  TruncatedSeries g(bound_);
  g.coeffs_[0] = Coeff(1);
  for (const MultiIndex& k : bound_.indices_grlex()) {
    if (k.is_zero()) continue;
    Coeff sum(0);
    for (const MultiIndex& l : DegreeBound(k).indices()) {
      if (l.is_zero()) continue;
      const Coeff& fl = coeffs_[bound_.flat_index(l)];
      if (is_zero(fl)) continue;
      sum += fl * g.coeffs_[bound_.flat_index(k - l)];
    }
    g.coeffs_[bound_.flat_index(k)] = -sum;
  }
  return g;
}

/// f^n by repeated squaring; n may be any integer (negative n inverts first,
/// which requires constant term 1).  f^0 = 1.
template <typename Coeff>
TruncatedSeries<Coeff> pow(const TruncatedSeries<Coeff>& f, BigInt n) {
  if (n < 0) {
    if (!f.has_unit_constant_term()) {
      throw std::domain_error("series pow: negative power needs constant term 1");
    }
    return pow(f.inverse(), BigInt(-n));
  }
  auto result = TruncatedSeries<Coeff>::one(f.bound());
  auto base = f;
  while (n > 0) {
    if ((n & 1) != 0) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

template <typename Coeff>
std::ostream& operator<<(std::ostream& os, const TruncatedSeries<Coeff>& f) {
  os << "{";
  bool first = true;
  for (const MultiIndex& k : f.bound().indices_grlex()) {
    if (is_zero(f.at(k))) continue;
    if (!first) os << ", ";
    os << k << ": " << f.at(k);
    first = false;
  }
  return os << "}";
}

using IntSeries = TruncatedSeries<BigInt>;
using PolySeries = TruncatedSeries<BivarPoly>;

/// Embeds an integer series as a constant-polynomial series.
PolySeries to_poly_series(const IntSeries& f);

/// Applies eval(1,1) to every coefficient; the coefficientwise Euler
/// characteristic reduction.
IntSeries eval_ones(const PolySeries& f);

}  // namespace uconf
