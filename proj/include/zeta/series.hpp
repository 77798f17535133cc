#pragma once

#include <vector>

#include "zeta/rational.hpp"
#include "zeta/rational_function.hpp"

namespace zeta {

// Formal power series with exact rational coefficients, truncated at a
// fixed order N (coefficients of t^0 .. t^N).
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, std::vector<BigRational> coeffs);

  static TruncatedSeries one(int order);

  int order() const { return int(coeffs_.size()) - 1; }
  const BigRational& coeff(int i) const { return coeffs_[i]; }
  BigRational& coeff(int i) { return coeffs_[i]; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  TruncatedSeries truncate(int order) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  // Truncated division; b must have a nonzero constant term.
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

 private:
  std::vector<BigRational> coeffs_;
};

// exp of a series with zero constant term, via the standard recurrence
// n e_n = sum_{j=1..n} j s_j e_{n-j}.
TruncatedSeries series_exp(const TruncatedSeries& s);

// Inverse of series_exp on its image; requires constant term 1.
TruncatedSeries series_log(const TruncatedSeries& u);

// Taylor coefficients of f at 0 through degree `order`; requires den(0) != 0.
TruncatedSeries series_of_rational(const RationalFunction& f, int order);

}  // namespace zeta
