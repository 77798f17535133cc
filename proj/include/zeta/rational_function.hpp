#pragma once

#include <string>

#include "zeta/polynomial.hpp"

namespace zeta {

// Ratio of integer polynomials, kept canonical: gcd(num, den) = 1 over the
// rationals, the integer contents of num and den are coprime, and the sign
// is fixed by den(0) > 0 (or a positive leading denominator coefficient
// when t = 0 is a pole).
class RationalFunction {
 public:
  RationalFunction();  // 0/1
  RationalFunction(IntPolynomial num, IntPolynomial den);

  static RationalFunction one();
  static RationalFunction of(IntPolynomial p);  // p / 1

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  RationalFunction reciprocal() const;

  std::string pretty(const std::string& var = "t") const;

 private:
  void normalize();
  IntPolynomial num_;
  IntPolynomial den_;
};

}  // namespace zeta
