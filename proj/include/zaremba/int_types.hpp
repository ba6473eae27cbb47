#ifndef ZAREMBA_INT_TYPES_HPP
#define ZAREMBA_INT_TYPES_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace zaremba {

// Exact arbitrary-precision integer. All continuants, censuses, growth tables
// and matrix chains are computed in this type; floating point appears only at
// the very end of root extraction.
using Int = boost::multiprecision::cpp_int;

// Exact rational, used for certified sign evaluation of polynomials during
// bisection and for ceil/floor arithmetic on bound chains.
using Rational = boost::multiprecision::cpp_rational;

// a^e for small nonnegative exponents.
inline Int ipow(const Int& a, unsigned e) {
  Int r = 1;
  Int b = a;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

inline std::string to_string(const Int& v) { return v.str(); }

// Exact fixed-point decimal rendering of a rational, truncated toward zero
// after `digits` fractional digits. Deterministic (no floating point).
inline std::string rational_decimal(const Rational& x, int digits) {
  Int num = boost::multiprecision::numerator(x);
  const Int den = boost::multiprecision::denominator(x);
  std::string out;
  if (num < 0) {
    out += '-';
    num = -num;
  }
  out += Int(num / den).str();
  Int rem = num % den;
  if (digits > 0) {
    out += '.';
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      out += static_cast<char>('0' + static_cast<int>(Int(rem / den)));
      rem %= den;
    }
  }
  return out;
}

// Smallest k >= 0 with 2^k >= num/den (num, den > 0). Exact.
inline int ceil_log2(const Int& num, const Int& den) {
  int k = 0;
  Int p = den;
  while (p < num) {
    p <<= 1;
    ++k;
  }
  return k;
}

// ceil(num/den) for den > 0.
inline Int ceil_div(const Int& num, const Int& den) {
  Int q = num / den;
  if (q * den < num) ++q;
  return q;
}

}  // namespace zaremba

#endif  // ZAREMBA_INT_TYPES_HPP
