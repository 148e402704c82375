#ifndef WSNU_WAVEFN_HPP
#define WSNU_WAVEFN_HPP

#include <array>
#include <functional>
#include <optional>

#include "wsnu/jacobi.hpp"
#include "wsnu/spectrum.hpp"

namespace wsnu {

enum class WavefnMode { published, residual_consistent };

/// Closed-form radial factor
///
///   R(s) = s^nu (1 - q_base s)^eta_half P_n^(a,b)(1 - 2 q_arg s)
///
/// together with the dimensionless coefficients (eps, beta, gamma, q) of
/// the reduced equation it is checked against. residual_consistent mode
/// uses nu = -bracket_n, a = 2 nu, q_base = q_arg = q, which closes the
/// reduced equation; published keeps the principal root +sqrt(eps)
/// and the q -> 1 presentation (bases 1 - s, argument 1 - 2s), which does
/// not close and is kept for comparison only.
///
/// On the physical line the substitution is s = -exp(-alpha x); powers of
/// s use log s = i pi - alpha x, continuous in x and principal on the
/// first period (so (-1)^w means exp(i pi w)).
struct Eigenfunction {
  EnergyLevel level;
  WavefnMode mode = WavefnMode::residual_consistent;
  cplx nu{0.0};        // exponent on s
  cplx eta_half{1.0};  // exponent on (1 - q_base s)
  JacobiParams jacobi;
  double q_base = 1.0;
  double q_arg = 1.0;

  cplx eps{0.0}, beta{0.0}, gamma{0.0};
  double q = 1.0;
  cplx alpha{1.0};  // steepness: 1/a, or i alpha_I for the complex variants

  std::optional<cplx> normalization;  // D_n once computed, else unnormalized

  /// R and its first two s-derivatives at complex s (principal powers).
  std::array<cplx, 3> derivatives(cplx s) const;
  cplx value(cplx s) const { return derivatives(s)[0]; }

  /// R at physical coordinate x through s = -exp(-alpha x).
  cplx value_x(double x) const;
};

/// Eigenfunction for a Hermitian-variant level. residual_consistent mode
/// refuses inadmissible levels ("no-consistent-eigenfunction").
Eigenfunction assemble_hermitian(const EnergyLevel& level,
                                 const PotentialParams& p, WavefnMode mode);

/// Eigenfunction for a PT-variant level; published reproduces the
/// literal published form (q-less exponents), which at V2 = 0, q = 1
/// collapses to the phase-explicit single-term expression.
Eigenfunction assemble_pt(const EnergyLevel& level, const PotentialParams& p,
                          WavefnMode mode);

/// Dimensionless residual-consistent assembly for sweeps: level n of the
/// reduced equation with (beta, gamma, q). flip_sign replaces the closing
/// exponent -bracket_n by +bracket_n (sign-discrimination checks).
Eigenfunction assemble_ws_dimensionless(int n, cplx beta, cplx gamma,
                                        double q, bool flip_sign = false);

struct ResidualReport {
  double max_rel = 0.0;
  bool trivial = false;  // function vanished on the whole grid
};

/// Max over the grid of |R'' + R'/s + N(s) R / (s(1-qs))^2| scaled by the
/// largest of the three term magnitudes, with
/// N(s) = (-eps q^2 + beta q - gamma)s^2 + (2 eps q - beta)s - eps.
/// Grid points within 1e-3 of s = 0 or s = 1/q raise "singular-grid".
ResidualReport ode_residual(const Eigenfunction& f,
                            const std::vector<cplx>& s_grid);

/// Adaptive quadrature of fn over [a, b] with an embedded Gauss pair
/// (7/15 nodes) and interval bisection until the local error estimate is
/// below rel_tol. Nodes are interior, so endpoint singular values are
/// never evaluated.
double integrate_adaptive(const std::function<double(double)>& fn, double a,
                          double b, double rel_tol = 1e-10);

/// D with D^2 * integral |R(x)|^2 dx = 1 over [x_lo, x_hi]. Requires |R|
/// to decay toward both endpoints (checked on a sample; violations raise
/// "non-normalizable" with the endpoint and peak magnitudes). The result
/// is also stored in f.normalization.
cplx normalize_numeric(Eigenfunction& f, double x_lo, double x_hi,
                       double rel_tol = 1e-8);

/// Same decay check and quadrature for a plain callable (test oracle path).
double normalize_numeric(const std::function<cplx(double)>& fn, double x_lo,
                         double x_hi, double rel_tol = 1e-8);

}  // namespace wsnu

#endif
