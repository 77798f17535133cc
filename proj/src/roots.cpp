#include "zeta/roots.hpp"

#include <algorithm>
#include <cmath>

#include "zeta/errors.hpp"

namespace zeta {

namespace {

using QPoly = std::vector<BigRational>;  // ascending, trailing nonzero

void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_qpoly(const IntPolynomial& p) {
  QPoly q;
  q.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) q.emplace_back(c);
  return q;
}

BigRational qeval(const QPoly& p, const BigRational& x) {
  BigRational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly qderiv(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(BigRational(long(i)) * p[i]);
  return d;
}

QPoly qrem(QPoly a, const QPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    BigRational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    a.pop_back();
    qtrim(a);
  }
  return a;
}

std::vector<QPoly> sturm_chain(const IntPolynomial& p) {
  std::vector<QPoly> chain;
  QPoly p0 = to_qpoly(p);
  qtrim(p0);
  if (p0.empty()) return chain;
  chain.push_back(p0);
  QPoly p1 = qderiv(p0);
  while (!p1.empty()) {
    chain.push_back(p1);
    QPoly r = qrem(chain[chain.size() - 2], p1);
    for (auto& c : r) c = -c;
    p1 = std::move(r);
  }
  return chain;
}

int sign_of(const BigRational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

int variations_at(const std::vector<QPoly>& chain, const BigRational& x) {
  int count = 0, last = 0;
  for (const auto& p : chain) {
    int s = sign_of(qeval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

BigRational cauchy_bound(const IntPolynomial& p) {
  // 1 + max |c_i| / |lc|
  BigRational lead{p.leading()};
  BigRational m(0);
  for (int i = 0; i < p.degree(); ++i) {
    BigRational a = abs_rational(BigRational(p.coeff(i)) / lead);
    if (a > m) m = a;
  }
  return m + 1;
}

}  // namespace

int real_root_count(const IntPolynomial& p, const BigRational& a, const BigRational& b) {
  require(!p.is_zero(), "root count of the zero polynomial");
  require(p.evaluate(a) != 0 && p.evaluate(b) != 0,
          "real_root_count requires nonzero endpoint values");
  if (!(a < b)) return 0;
  auto chain = sturm_chain(p);
  return variations_at(chain, a) - variations_at(chain, b);
}

std::optional<RootEnclosure> smallest_positive_root(const IntPolynomial& p,
                                                    const BigRational& tol) {
  require(!p.is_zero(), "smallest_positive_root of the zero polynomial");
  require(p.coeff(0) != 0, "smallest_positive_root requires p(0) != 0");
  require(tol > 0, "tolerance must be positive");
  if (p.degree() == 0) return std::nullopt;

  auto chain = sturm_chain(p);
  BigRational lo(0), hi = cauchy_bound(p);
  while (p.evaluate(hi) == 0) hi += 1;  // bound is strict in theory; belt and braces
  if (variations_at(chain, lo) - variations_at(chain, hi) == 0) return std::nullopt;

  // Invariant: p(lo) != 0, no roots in (0, lo], at least one root in (lo, hi].
  while (hi - lo > tol) {
    BigRational mid = (lo + hi) / 2;
    if (p.evaluate(mid) == 0) {
      // Exact hit. Smallest root is mid unless a root hides in (lo, mid).
      BigRational q = (lo + mid) / 2;
      while (p.evaluate(q) == 0) q = (lo + q) / 2;
      if (variations_at(chain, lo) - variations_at(chain, q) >= 1) {
        hi = q;
      } else if (real_root_count(p, q, mid) > 1 ||
                 variations_at(chain, q) - variations_at(chain, mid) > 1) {
        hi = mid;  // more roots below mid than mid itself; keep bisecting
      } else {
        return RootEnclosure{mid, mid};
      }
    } else {
      int c = variations_at(chain, lo) - variations_at(chain, mid);
      if (c >= 1)
        hi = mid;
      else
        lo = mid;
    }
  }
  return RootEnclosure{lo, hi};
}

std::vector<std::complex<double>> complex_roots(const IntPolynomial& p) {
  std::vector<std::complex<double>> roots;
  if (p.degree() <= 0) return roots;
  // Split off roots at the origin exactly.
  std::size_t low = 0;
  while (low < p.coeffs().size() && p.coeffs()[low] == 0) ++low;
  for (std::size_t i = 0; i < low; ++i) roots.emplace_back(0.0, 0.0);

  std::vector<std::complex<double>> c;
  for (std::size_t i = low; i < p.coeffs().size(); ++i)
    c.emplace_back(BigRational(p.coeffs()[i]).get_d(), 0.0);
  int n = int(c.size()) - 1;
  if (n <= 0) return roots;
  for (auto& x : c) x /= c.back();

  auto eval = [&](std::complex<double> z) {
    std::complex<double> acc(0.0, 0.0);
    for (int i = n; i >= 0; --i) acc = acc * z + c[i];
    return acc;
  };

  std::vector<std::complex<double>> z(n);
  std::complex<double> seed(0.4, 0.9);
  z[0] = seed;
  for (int i = 1; i < n; ++i) z[i] = z[i - 1] * seed;
  for (int iter = 0; iter < 500; ++iter) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> d(1.0, 0.0);
      for (int j = 0; j < n; ++j)
        if (j != i) d *= z[i] - z[j];
      std::complex<double> step = eval(z[i]) / d;
      z[i] -= step;
      worst = std::max(worst, std::abs(step));
    }
    if (worst < 1e-14) break;
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

}  // namespace zeta
