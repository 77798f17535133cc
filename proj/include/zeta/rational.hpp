#pragma once

#include <gmpxx.h>

#include <string>

namespace zeta {

// Exact arbitrary-precision arithmetic. GMP keeps rationals canonical
// (denominator > 0, gcd(|num|, den) = 1) after canonicalize().
using BigInt = mpz_class;
using BigRational = mpq_class;

// Parses "p/q" or "p" with optional sign; rejects q = 0 and garbage.
BigRational rational_from_string(const std::string& s);
BigInt int_from_string(const std::string& s);

// Renders "p/q", or "p" when the denominator is 1.
std::string rational_to_string(const BigRational& q);
std::string int_to_string(const BigInt& n);

double to_double(const BigRational& q);

inline BigRational make_rational(long num, long den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline BigRational abs_rational(const BigRational& q) {
  return q < 0 ? BigRational(-q) : q;
}

// True if q fits a signed 64-bit integer (used when emitting JSON numbers).
bool fits_int64(const BigInt& n);

}  // namespace zeta
