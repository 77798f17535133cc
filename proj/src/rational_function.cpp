#include "zeta/rational_function.hpp"

#include "zeta/errors.hpp"

namespace zeta {

RationalFunction::RationalFunction()
    : num_(), den_(IntPolynomial::constant(BigInt(1))) {}

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  ensure(!den_.is_zero(), "rational function with zero denominator");
  normalize();
}

RationalFunction RationalFunction::one() {
  return RationalFunction(IntPolynomial::constant(BigInt(1)),
                          IntPolynomial::constant(BigInt(1)));
}

RationalFunction RationalFunction::of(IntPolynomial p) {
  return RationalFunction(std::move(p), IntPolynomial::constant(BigInt(1)));
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = IntPolynomial::constant(BigInt(1));
    return;
  }
  IntPolynomial g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  BigInt cn = num_.content(), cd = den_.content();
  BigInt cg;
  mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (cg > 1) {
    std::vector<BigInt> n2(num_.coeffs()), d2(den_.coeffs());
    for (auto& c : n2) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cg.get_mpz_t());
    for (auto& c : d2) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cg.get_mpz_t());
    num_ = IntPolynomial(std::move(n2));
    den_ = IntPolynomial(std::move(d2));
  }
  const BigInt d0 = den_.coeff(0);
  bool flip = (d0 != 0) ? (d0 < 0) : (den_.leading() < 0);
  if (flip) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  ensure(!b.num_.is_zero(), "division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::reciprocal() const {
  ensure(!num_.is_zero(), "reciprocal of the zero rational function");
  return RationalFunction(den_, num_);
}

std::string RationalFunction::pretty(const std::string& var) const {
  if (den_ == IntPolynomial::constant(BigInt(1))) return num_.pretty(var);
  return "(" + num_.pretty(var) + ")/(" + den_.pretty(var) + ")";
}

}  // namespace zeta
