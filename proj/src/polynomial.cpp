#include "zeta/polynomial.hpp"

#include <algorithm>

#include "zeta/errors.hpp"

namespace zeta {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
  IntPolynomial p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

IntPolynomial IntPolynomial::monomial(BigInt c, int degree) {
  IntPolynomial p;
  if (c != 0) {
    p.coeffs_.assign(degree + 1, BigInt(0));
    p.coeffs_[degree] = std::move(c);
  }
  return p;
}

IntPolynomial IntPolynomial::linear(BigInt a, BigInt b) {
  return IntPolynomial({std::move(a), std::move(b)});
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return BigInt(0);
  return coeffs_[i];
}

const BigInt& IntPolynomial::leading() const {
  ensure(!coeffs_.empty(), "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigRational IntPolynomial::evaluate(const BigRational& t) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + BigRational(*it);
  }
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  return a + (-b);
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& a) {
  if (c == 0) return IntPolynomial();
  IntPolynomial r(a);
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

BigInt IntPolynomial::content() const {
  BigInt g(0);
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return IntPolynomial();
  BigInt g = content();
  if (leading() < 0) g = -g;
  IntPolynomial r(*this);
  for (auto& c : r.coeffs_) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    c = q;
  }
  return r;
}

IntPolynomial IntPolynomial::derivative() const {
  if (degree() <= 0) return IntPolynomial();
  std::vector<BigInt> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = BigInt(i) * coeffs_[i];
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::pretty(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt a = c > 0 ? c : BigInt(-c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool unit = (a == 1 && i > 0);
    if (!unit) out += a.get_str();
    if (i >= 1) {
      if (!unit) out += "*";
      out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out;
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  ensure(!b.is_zero(), "division by the zero polynomial");
  if (a.is_zero()) return IntPolynomial();
  ensure(a.degree() >= b.degree(), "inexact polynomial division (degree)");
  std::vector<BigInt> rem(a.coeffs());
  std::vector<BigInt> quo(a.degree() - b.degree() + 1, BigInt(0));
  for (int i = a.degree(); i >= b.degree(); --i) {
    BigInt& top = rem[i];
    if (top == 0) continue;
    BigInt q;
    mpz_tdiv_qr(q.get_mpz_t(), top.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
    ensure(top == 0, "inexact polynomial division (leading coefficient)");
    quo[i - b.degree()] = q;
    for (int j = 0; j < b.degree(); ++j) rem[i - b.degree() + j] -= q * b.coeff(j);
  }
  for (const auto& r : rem) ensure(r == 0, "inexact polynomial division (remainder)");
  return IntPolynomial(std::move(quo));
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, exact over Z.
IntPolynomial pseudo_rem(IntPolynomial a, const IntPolynomial& b) {
  int k = a.degree() - b.degree() + 1;
  BigInt lb = b.leading();
  std::vector<BigInt> r(a.coeffs());
  int steps = 0;
  while (static_cast<int>(r.size()) - 1 >= b.degree() && !r.empty()) {
    BigInt top = r.back();
    int shift = static_cast<int>(r.size()) - 1 - b.degree();
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= b.degree(); ++j) r[shift + j] -= top * b.coeff(j);
    while (!r.empty() && r.back() == 0) r.pop_back();
    ++steps;
  }
  // Scale so the total multiplier is exactly lc(b)^k, keeping signs stable.
  IntPolynomial rem{std::vector<BigInt>(r)};
  for (; steps < k; ++steps) rem = lb * rem;
  return rem;
}

}  // namespace

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return b.is_zero() ? IntPolynomial() : IntPolynomial::constant(b.content()) * b.primitive_part();
  if (b.is_zero()) return IntPolynomial::constant(a.content()) * a.primitive_part();
  BigInt ca = a.content(), cb = b.content();
  BigInt cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPolynomial f = a.primitive_part();
  IntPolynomial g = b.primitive_part();
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    IntPolynomial r = pseudo_rem(f, g).primitive_part();
    f = g;
    g = r;
  }
  return IntPolynomial::constant(cg) * f.primitive_part();
}

}  // namespace zeta
