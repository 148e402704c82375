#ifndef WSNU_POLY_HPP
#define WSNU_POLY_HPP

#include <algorithm>
#include <cmath>

#include "wsnu/common.hpp"

namespace wsnu {

/// Polynomial of degree <= 2 with complex coefficients, c0 + c1 s + c2 s^2.
struct Poly2 {
  cplx c0{0.0};
  cplx c1{0.0};
  cplx c2{0.0};

  constexpr Poly2() = default;
  constexpr Poly2(cplx a0, cplx a1, cplx a2 = 0.0) : c0(a0), c1(a1), c2(a2) {}

  cplx eval(cplx s) const { return (c2 * s + c1) * s + c0; }

  /// Derivative, still representable in Poly2 (degree drops by one).
  Poly2 derivative() const { return Poly2(c1, 2.0 * c2, 0.0); }

  double max_coeff() const {
    return std::max({std::abs(c0), std::abs(c1), std::abs(c2)});
  }

  /// Highest index with a nonzero coefficient, relative tolerance 1e-14
  /// against the largest coefficient. The zero polynomial has degree 0.
  int degree(double tol = 1e-14) const {
    const double scale = max_coeff();
    if (scale == 0.0) return 0;
    if (std::abs(c2) > tol * scale) return 2;
    if (std::abs(c1) > tol * scale) return 1;
    return 0;
  }

  Poly2 operator+(const Poly2& o) const {
    return Poly2(c0 + o.c0, c1 + o.c1, c2 + o.c2);
  }
  Poly2 operator-(const Poly2& o) const {
    return Poly2(c0 - o.c0, c1 - o.c1, c2 - o.c2);
  }
  Poly2 operator*(cplx f) const { return Poly2(f * c0, f * c1, f * c2); }
};

inline Poly2 operator*(cplx f, const Poly2& p) { return p * f; }

inline bool approx_equal(const Poly2& a, const Poly2& b, double rel = 1e-12) {
  const double scale = std::max({a.max_coeff(), b.max_coeff(), 1.0});
  return std::abs(a.c0 - b.c0) <= rel * scale &&
         std::abs(a.c1 - b.c1) <= rel * scale &&
         std::abs(a.c2 - b.c2) <= rel * scale;
}

}  // namespace wsnu

#endif
