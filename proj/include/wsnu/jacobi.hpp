#ifndef WSNU_JACOBI_HPP
#define WSNU_JACOBI_HPP

#include <complex>

#include "wsnu/common.hpp"

namespace wsnu {

/// Degree and the two parameters of P_n^(a,b). The parameters may be
/// complex; the polynomial is then defined by the same three-term
/// recurrence and coincides with the classical family for a, b > -1.
struct JacobiParams {
  int n = 0;
  cplx a_param{0.0};
  cplx b_param{0.0};
};

/// P_n^(a,b)(x) by the three-term recurrence
///   2m(m+a+b)(2m+a+b-2) P_m =
///     (2m+a+b-1)[(2m+a+b)(2m+a+b-2) x + a^2-b^2] P_{m-1}
///     - 2(m+a-1)(m+b-1)(2m+a+b) P_{m-2}.
/// Scalar covers double and std::complex<double> arguments/parameters.
/// For complex parameters the recurrence denominators vanish on the set
/// a+b in {-2, ..., -n, 2-2m}; evaluation close to it loses accuracy
/// proportionally to 1/|m+a+b|.
template <typename Scalar>
Scalar jacobi_eval(int n, Scalar a, Scalar b, Scalar x) {
  if (n < 0) throw Error("invalid-n", "degree must be >= 0");
  Scalar pm2 = Scalar(1);
  if (n == 0) return pm2;
  Scalar pm1 = (a - b) / Scalar(2) + (Scalar(1) + (a + b) / Scalar(2)) * x;
  for (int m = 2; m <= n; ++m) {
    const Scalar fm = Scalar(m);
    const Scalar t = Scalar(2) * fm + a + b;
    const Scalar pm =
        ((t - Scalar(1)) * ((t * (t - Scalar(2))) * x + a * a - b * b) * pm1 -
         Scalar(2) * (fm + a - Scalar(1)) * (fm + b - Scalar(1)) * t * pm2) /
        (Scalar(2) * fm * (fm + a + b) * (t - Scalar(2)));
    pm2 = pm1;
    pm1 = pm;
  }
  return pm1;
}

inline cplx jacobi_eval(const JacobiParams& jp, cplx x) {
  return jacobi_eval<cplx>(jp.n, jp.a_param, jp.b_param, x);
}

/// d/dx P_n^(a,b)(x) = (n+a+b+1)/2 P_{n-1}^(a+1,b+1)(x).
template <typename Scalar>
Scalar jacobi_derivative(int n, Scalar a, Scalar b, Scalar x) {
  if (n == 0) return Scalar(0);
  return (Scalar(n) + a + b + Scalar(1)) / Scalar(2) *
         jacobi_eval(n - 1, a + Scalar(1), b + Scalar(1), x);
}

/// Second derivative via the same parameter shift applied twice.
template <typename Scalar>
Scalar jacobi_second_derivative(int n, Scalar a, Scalar b, Scalar x) {
  if (n <= 1) return Scalar(0);
  return (Scalar(n) + a + b + Scalar(1)) * (Scalar(n) + a + b + Scalar(2)) /
         Scalar(4) *
         jacobi_eval(n - 2, a + Scalar(2), b + Scalar(2), x);
}

}  // namespace wsnu

#endif
