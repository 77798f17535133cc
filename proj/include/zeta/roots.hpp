#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "zeta/polynomial.hpp"

namespace zeta {

struct RootEnclosure {
  BigRational lo, hi;  // the root lies in [lo, hi]; lo == hi when exact
  double midpoint() const { return to_double((lo + hi) / 2); }
};

// Number of distinct real roots of p in the open interval (a, b).
// Requires p(a) != 0 and p(b) != 0.
int real_root_count(const IntPolynomial& p, const BigRational& a, const BigRational& b);

// Enclosure of the smallest positive real root of p, to the requested
// interval width, by sign-variation bisection on the exact Sturm chain.
// Requires p(0) != 0. Returns nullopt when p has no positive real root.
std::optional<RootEnclosure> smallest_positive_root(const IntPolynomial& p,
                                                    const BigRational& tol);

// All complex roots, numerically (Durand-Kerner). Roots at the origin are
// split off exactly first. Reporting/cross-checks only; never feeds back
// into exact results.
std::vector<std::complex<double>> complex_roots(const IntPolynomial& p);

}  // namespace zeta
