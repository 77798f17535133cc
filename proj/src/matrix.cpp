#include "zeta/matrix.hpp"

#include "zeta/errors.hpp"

namespace zeta {

IntMatrix::IntMatrix(int dim, std::vector<BigInt> entries)
    : dim_(dim), entries_(std::move(entries)) {
  ensure(entries_.size() == std::size_t(dim) * dim, "matrix entry count != dim^2");
}

IntMatrix IntMatrix::identity(int dim) {
  IntMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

BigInt IntMatrix::trace() const {
  BigInt t(0);
  for (int i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  ensure(a.dim_ == b.dim_, "matrix dimension mismatch");
  const int n = a.dim_;
  IntMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const BigInt& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  ensure(a.dim_ == b.dim_, "matrix dimension mismatch");
  IntMatrix c(a);
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
  return c;
}

IntPolynomial charpoly_rev(const IntMatrix& m) {
  const int n = m.dim();
  if (n == 0) return IntPolynomial::constant(BigInt(1));
  // Faddeev-LeVerrier: det(xI - M) = x^n + c[n-1] x^(n-1) + ... + c[0];
  // then det(I - tM) = 1 + c[n-1] t + ... + c[0] t^n.
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  IntMatrix work = IntMatrix::identity(n);
  IntMatrix prod = m;  // m * work
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      work = prod;
      for (int i = 0; i < n; ++i) work.at(i, i) += c[n - k + 1];
      prod = m * work;
    }
    BigInt t = prod.trace();
    BigInt q;
    BigInt kk(k);
    mpz_divexact(q.get_mpz_t(), t.get_mpz_t(), kk.get_mpz_t());
    c[n - k] = -q;
  }
  std::vector<BigInt> rev(n + 1);
  for (int i = 0; i <= n; ++i) rev[i] = c[n - i];
  return IntPolynomial(std::move(rev));
}

BigInt trace_power(const IntMatrix& m, int p) {
  require(p >= 1, "trace_power requires p >= 1");
  IntMatrix acc = m;
  for (int i = 1; i < p; ++i) acc = acc * m;
  return acc.trace();
}

}  // namespace zeta
