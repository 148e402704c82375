#ifndef WSNU_SPECTRUM_HPP
#define WSNU_SPECTRUM_HPP

#include <vector>

#include "wsnu/model.hpp"

namespace wsnu {

/// Unit-free quantization data for level n of the reduced equation with
/// dimensionless (beta, gamma, q):
///
///   bracket_n = (1+2n)/2 - (n(n+1) - beta/q) / (1 + 2n + delta),
///   eps_n     = bracket_n^2            (squaring is the final step),
///   nu_n      = -bracket_n             (the root that closes the ODE).
///
/// nu_n is the value of the formal square root of eps for which
/// lambda = k + pi' equals lambda_n; the positive root does not close.
struct WsLevel {
  int n = 0;
  cplx bracket{0.0};
  cplx eps{0.0};
  cplx nu{0.0};
  cplx delta{1.0};
  cplx eta{2.0};
};

WsLevel ws_level(int n, cplx beta, cplx gamma, double q);

/// One closed-form energy level with admissibility bookkeeping.
/// admissibility_reasons lists the names of the conditions that FAILED;
/// admissible == reasons.empty().
struct EnergyLevel {
  int n = 0;
  int l = 0;
  Variant variant = Variant::hermitian;
  cplx energy{0.0};
  cplx eps{0.0};
  cplx bracket{0.0};
  cplx nu{0.0};
  bool admissible = true;
  std::vector<std::string> admissibility_reasons;
};

/// s-wave level of the Hermitian variant (uses V1, V2, q, a, units).
EnergyLevel energy_hermitian_s(int n, const PotentialParams& p);

/// Level of the Hermitian variant with the barrier standing in for the
/// centrifugal term: gamma_eff = l(l+1), V2 ignored. l = 0 reproduces
/// energy_hermitian_s at V2 = 0 bit for bit.
EnergyLevel energy_hermitian_l(int n, int l, const PotentialParams& p);

/// PT-symmetric variant level. Real when V2 <= alpha_I^2 q^2 / 8 (the
/// zero-discriminant threshold counts as real), complex above.
EnergyLevel energy_pt(int n, const PotentialParams& p);

/// Non-PT variant level (V1 -> i V1I); generally complex. Admissibility
/// compares n against the real part of the positive-spectrum bound.
EnergyLevel energy_nonpt(int n, const PotentialParams& p);

/// Levels n = 0..n_max in order, each fully flagged, none dropped.
std::vector<EnergyLevel> enumerate_levels(const PotentialParams& p, int l,
                                          int n_max);

/// Upper bound on n for a positive real spectrum of the complex variants:
///   sqrt((V1_eff/q - V2/q^2) / (hbar2_over_2m alpha_I^2))
///     - (1 + sqrt(1 - 8 V2 / (denom q^2)))/2,
/// with V1_eff = V1 (pt) or i V1I (non_pt). Complex in general; levels
/// compare n against the real part, strictly.
cplx positive_spectrum_bound(const PotentialParams& p);

/// |lambda - lambda_n| / max(1, |lambda|, |lambda_n|) with both sides
/// evaluated through the generic engine at eps = nu_n^2, on the candidate
/// whose pi carries the signed root nu_n. The defining identity of the
/// closed-form levels; must vanish to rounding for every level.
double lambda_closure_gap(const EnergyLevel& level, const PotentialParams& p);

/// Same, from dimensionless data (used by sweeps and the verify suite).
double lambda_closure_gap(const WsLevel& level, cplx beta, cplx gamma,
                          double q);

}  // namespace wsnu

#endif
