#pragma once

#include <vector>

#include "zeta/polynomial.hpp"
#include "zeta/rational.hpp"

namespace zeta {

// Square matrix with arbitrary-precision integer entries (row-major).
class IntMatrix {
 public:
  IntMatrix() : dim_(0) {}
  explicit IntMatrix(int dim) : dim_(dim), entries_(std::size_t(dim) * dim, BigInt(0)) {}
  IntMatrix(int dim, std::vector<BigInt> entries);

  static IntMatrix identity(int dim);

  int dim() const { return dim_; }
  BigInt& at(int i, int j) { return entries_[std::size_t(i) * dim_ + j]; }
  const BigInt& at(int i, int j) const { return entries_[std::size_t(i) * dim_ + j]; }
  const std::vector<BigInt>& entries() const { return entries_; }

  BigInt trace() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  int dim_;
  std::vector<BigInt> entries_;
};

// det(I - t M), exact, via the division-free Faddeev-LeVerrier recursion
// (the integer divisions it performs are exact). Constant term is 1 and
// the degree is at most dim.
IntPolynomial charpoly_rev(const IntMatrix& m);

// tr(M^p) for p >= 1, by repeated exact multiplication.
BigInt trace_power(const IntMatrix& m, int p);

}  // namespace zeta
