#ifndef WSNU_MODEL_HPP
#define WSNU_MODEL_HPP

#include <cmath>

#include "wsnu/nu.hpp"
#include "wsnu/poly.hpp"

namespace wsnu {

enum class Variant { hermitian, pt_symmetric, non_pt };

const char* to_string(Variant v);

/// Physical parameters of the generalized Woods-Saxon family
///
///   V(r) = -V1 t/(1 + q t) + V2 t^2/(1 + q t)^2,  t = exp(-(r - R0)/a),
///
/// with R0 = r0 A^(1/3) and surface steepness alpha = 1/a. The
/// pt_symmetric variant replaces alpha by i*alpha_I; the non_pt variant
/// additionally replaces V1 by i*V1I.
struct PotentialParams {
  double V1 = 1.0;       // well depth (energy)
  double V2 = 0.0;       // barrier strength (energy), >= 0
  double q = 1.0;        // deformation, >= 1
  double a = 1.0;        // surface diffuseness (length), > 0
  double r0 = 1.0;       // radius parameter (length)
  double A = 1.0;        // mass number, > 0
  double hbar2_over_2m = 0.5;  // 1/2 in atomic units; MeV fm^2 otherwise
  Variant variant = Variant::hermitian;
  double alpha_I = 1.0;  // inverse length, PT variants
  double V1I = 0.0;      // energy, non_pt variant

  double R0() const { return r0 * std::cbrt(A); }
  double alpha() const { return 1.0 / a; }

  /// alpha^2 carrying the variant's sign: 1/a^2 for hermitian,
  /// -alpha_I^2 when alpha is taken purely imaginary.
  double alpha2_signed() const {
    return variant == Variant::hermitian ? 1.0 / (a * a) : -alpha_I * alpha_I;
  }

  /// Depth coefficient of the first potential term, i*V1I for non_pt.
  cplx v1_effective() const {
    return variant == Variant::non_pt ? cplx(0.0, V1I) : cplx(V1, 0.0);
  }

  void validate() const;
};

/// Dimensionless parameters of the reduced equation:
///   eps = -2mE/(hbar^2 alpha^2), beta = 2mV1/(hbar^2 alpha^2),
///   gamma = 2mV2/(hbar^2 alpha^2), delta = sqrt(1 + 4 gamma/q^2),
///   eta = 1 + delta, mu = eta/2.
/// For the non-Hermitian variants alpha^2 < 0 (and V1 imaginary for
/// non_pt), so the fields are complex.
struct DimensionlessParams {
  cplx eps{0.0};
  cplx beta{0.0};
  cplx gamma{0.0};
  cplx delta{1.0};
  cplx eta{2.0};
  cplx mu{1.0};
  bool threshold = false;  // E == 0
};

/// Map (params, E) -> dimensionless parameters, variant-aware.
DimensionlessParams dimensionless(const PotentialParams& p, cplx E);

/// Inverse of the eps map: E = -(hbar^2 alpha^2 / 2m) eps.
cplx energy_from_eps(const PotentialParams& p, cplx eps);

/// Real-variant potential at radius r; finite for all r >= 0, -> 0 as
/// r -> infinity. Evaluated through u = 1/(exp((r-R0)/a) + q), which is
/// overflow-free on both tails.
double potential_real(double r, const PotentialParams& p);

/// Well plus Woods-Saxon-shaped barrier of strength l(l+1) hbar^2
/// alpha^2/2m standing in for the centrifugal term.
double effective_potential_l(double r, const PotentialParams& p, int l);

/// Barrier strength of the effective potential, l(l+1) hbar^2 alpha^2/2m.
double effective_barrier_strength(const PotentialParams& p, int l);

/// Complex potential of the PT-symmetric variant at coordinate x.
/// Satisfies conj(V(-x)) = V(x). Throws "potential-pole" where
/// 1 + q^2 + 2q cos(alpha_I x) vanishes (q = 1, alpha_I x = pi mod 2pi).
cplx potential_pt(double x, const PotentialParams& p);

/// Complex potential of the non-PT variant (V1 -> i V1I); breaks PT
/// invariance for V1I != 0. Same pole condition as potential_pt.
cplx potential_nonpt(double x, const PotentialParams& p);

/// The hypergeometric-form problem of the reduced radial equation:
///   sigma = s(1 - qs), tau_tilde = 1 - qs,
///   sigma_tilde = (-eps q^2 + beta q - gamma) s^2 + (2 eps q - beta) s - eps.
NUProblem make_nu_problem(cplx eps, cplx beta, cplx gamma, double q);

/// Alternative steepness convention (q+1)/R0 sometimes used for the
/// effective potential; everything here uses 1/a. Provided as a named
/// conversion only.
double alpha_from_width(double q, double R0);

}  // namespace wsnu

#endif
