#pragma once

#include <string>
#include <vector>

#include "zeta/rational.hpp"

namespace zeta {

// Univariate polynomial with arbitrary-precision integer coefficients,
// stored in ascending degree. The zero polynomial is the empty list;
// otherwise the leading coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial constant(BigInt c);
  static IntPolynomial monomial(BigInt c, int degree);
  // 1 - t, 1 - k t, ... convenience for linear factors a + b t.
  static IntPolynomial linear(BigInt a, BigInt b);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1 (acts as the additive identity).
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int i) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& leading() const;

  BigRational evaluate(const BigRational& t) const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  // gcd of coefficients, >= 0; content of the zero polynomial is 0.
  BigInt content() const;
  // this / content, with leading coefficient made positive.
  IntPolynomial primitive_part() const;
  IntPolynomial derivative() const;

  // Human-readable rendering, e.g. "1 - t - t^2".
  std::string pretty(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// Exact division; throws invariant_error if b does not divide a.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

// Primitive gcd over Z via the primitive pseudo-remainder sequence.
// Result has positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace zeta
