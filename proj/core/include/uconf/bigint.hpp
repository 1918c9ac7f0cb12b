#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace uconf {

// Exact integer type used for every coefficient and exponent in the library.
// Binomial-type coefficients grow without bound, so fixed-width integers are
// never used in results.
using BigInt = boost::multiprecision::cpp_int;

inline bool is_zero(const BigInt& v) { return v.is_zero(); }

// Generalized binomial coefficient C(n, k) for integer n (possibly negative)
// and k >= 0.  C(n, 0) = 1, C(n, k) = n(n-1)...(n-k+1) / k!.
inline BigInt binomial(const BigInt& n, std::int64_t k) {
  if (k < 0) return 0;
  BigInt result = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;  // exact: C(n,i+1)*(i+1) = C(n,i)*(n-i)
  }
  return result;
}

inline BigInt factorial(std::int64_t n) {
  BigInt result = 1;
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace uconf
