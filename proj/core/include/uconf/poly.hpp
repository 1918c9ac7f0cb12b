#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "uconf/bigint.hpp"

namespace uconf {

/// An element of Z[u,v] with exact integer coefficients.  Serves as the
/// coefficient ring of Hodge-Deligne series and as the exponent ring of the
/// power structure.
///
/// Canonical form: no zero coefficient is ever stored, so equality is
/// structural equality of the term maps.
class BivarPoly {
 public:
  // (u exponent, v exponent) -> coefficient, ordered by (i, j).
  using TermMap = std::map<std::pair<int, int>, BigInt>;

  BivarPoly() = default;  // zero
  explicit BivarPoly(const BigInt& constant) {
    if (!uconf::is_zero(constant)) terms_.emplace(std::make_pair(0, 0), constant);
  }
  explicit BivarPoly(int constant) : BivarPoly(BigInt(constant)) {}

  /// c * u^i * v^j
  static BivarPoly monomial(BigInt c, int u_exp, int v_exp);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == std::make_pair(0, 0));
  }
  const TermMap& terms() const { return terms_; }

  /// Coefficient at u^i v^j (zero if absent).
  const BigInt& coeff(int u_exp, int v_exp) const;

  /// Evaluation at integer points; eval(1,1) is the coefficient sum and
  /// carries a Hodge-Deligne polynomial to the Euler characteristic.
  BigInt eval(const BigInt& u, const BigInt& v) const;

  BivarPoly& operator+=(const BivarPoly& other);
  BivarPoly& operator-=(const BivarPoly& other);
  BivarPoly& operator*=(const BivarPoly& other) { return *this = *this * other; }

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator-(const BivarPoly& a);
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);

  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BivarPoly& a, const BivarPoly& b) { return !(a == b); }

 private:
  TermMap terms_;
};

inline bool is_zero(const BivarPoly& p) { return p.is_zero(); }

/// Text form: sum of `c*u^i*v^j` terms sorted by (i, j), e.g. "1 + u*v",
/// "-3*u^2*v".  The zero polynomial prints as "0".
std::string to_string(const BivarPoly& p);

inline std::ostream& operator<<(std::ostream& os, const BivarPoly& p) { return os << to_string(p); }

/// Parses the text form.  Whitespace-insensitive; accepts "1", "u*v",
/// "-3*u^2*v", "+2*v^3 - u", etc.  Throws PolyParseError on malformed input.
BivarPoly parse_poly(std::string_view text);

struct PolyParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace uconf
