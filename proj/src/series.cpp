#include "zeta/series.hpp"

#include <algorithm>

#include "zeta/errors.hpp"

namespace zeta {

TruncatedSeries::TruncatedSeries(int order) {
  require(order >= 0, "series order must be >= 0");
  coeffs_.assign(order + 1, BigRational(0));
}

TruncatedSeries::TruncatedSeries(int order, std::vector<BigRational> coeffs)
    : coeffs_(std::move(coeffs)) {
  ensure(int(coeffs_.size()) == order + 1, "series coefficient count != order + 1");
}

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s.coeff(0) = 1;
  return s;
}

TruncatedSeries TruncatedSeries::truncate(int order) const {
  require(order >= 0, "series order must be >= 0");
  TruncatedSeries s(order);
  for (int i = 0; i <= std::min(order, this->order()); ++i) s.coeff(i) = coeff(i);
  return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::min(a.order(), b.order());
  TruncatedSeries c(n);
  for (int i = 0; i <= n; ++i) c.coeff(i) = a.coeff(i) + b.coeff(i);
  return c;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::min(a.order(), b.order());
  TruncatedSeries c(n);
  for (int i = 0; i <= n; ++i) c.coeff(i) = a.coeff(i) - b.coeff(i);
  return c;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::min(a.order(), b.order());
  TruncatedSeries c(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) c.coeff(i + j) += a.coeff(i) * b.coeff(j);
  return c;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  require(b.coeff(0) != 0, "series division requires a unit constant term");
  int n = std::min(a.order(), b.order());
  TruncatedSeries c(n);
  for (int i = 0; i <= n; ++i) {
    BigRational acc = a.coeff(i);
    for (int j = 1; j <= i; ++j) acc -= b.coeff(j) * c.coeff(i - j);
    c.coeff(i) = acc / b.coeff(0);
  }
  return c;
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
  require(s.coeff(0) == 0, "series_exp requires a zero constant term");
  int n = s.order();
  TruncatedSeries e(n);
  e.coeff(0) = 1;
  for (int m = 1; m <= n; ++m) {
    BigRational acc(0);
    for (int j = 1; j <= m; ++j) acc += BigRational(j) * s.coeff(j) * e.coeff(m - j);
    e.coeff(m) = acc / BigRational(m);
  }
  return e;
}

TruncatedSeries series_log(const TruncatedSeries& u) {
  require(u.coeff(0) == 1, "series_log requires constant term 1");
  int n = u.order();
  TruncatedSeries l(n);
  for (int m = 1; m <= n; ++m) {
    BigRational acc = BigRational(m) * u.coeff(m);
    for (int j = 1; j < m; ++j) acc -= BigRational(j) * l.coeff(j) * u.coeff(m - j);
    l.coeff(m) = acc / BigRational(m);
  }
  return l;
}

TruncatedSeries series_of_rational(const RationalFunction& f, int order) {
  require(f.den().coeff(0) != 0, "series_of_rational requires den(0) != 0 (pole at the origin)");
  require(order >= 0, "series order must be >= 0");
  TruncatedSeries c(order);
  const BigRational d0{f.den().coeff(0)};
  for (int i = 0; i <= order; ++i) {
    BigRational acc{f.num().coeff(i)};
    for (int j = 1; j <= i; ++j) acc -= BigRational(f.den().coeff(j)) * c.coeff(i - j);
    c.coeff(i) = acc / d0;
  }
  return c;
}

}  // namespace zeta
