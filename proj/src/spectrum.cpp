#include "wsnu/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wsnu {

WsLevel ws_level(int n, cplx beta, cplx gamma, double q) {
  if (n < 0) throw Error("invalid-n", "quantum number must be >= 0");
  WsLevel lv;
  lv.n = n;
  lv.delta = principal_sqrt(1.0 + 4.0 * gamma / (q * q));
  lv.eta = 1.0 + lv.delta;
  const double nn = n;
  lv.bracket = (1.0 + 2.0 * nn) / 2.0 -
               (nn * (nn + 1.0) - beta / q) / (1.0 + 2.0 * nn + lv.delta);
  lv.eps = lv.bracket * lv.bracket;
  lv.nu = -lv.bracket;
  return lv;
}

namespace {

// Machinery parameters for the level formulas. gamma_override, when >= 0,
// replaces the V2-derived gamma (the l != 0 surrogate uses l(l+1)).
struct Machinery {
  cplx beta;
  cplx gamma;
};

Machinery machinery_of(const PotentialParams& p, double gamma_override = -1.0) {
  const cplx scale = p.hbar2_over_2m * p.alpha2_signed();
  Machinery m;
  m.beta = p.v1_effective() / scale;
  m.gamma = gamma_override >= 0.0 ? cplx(gamma_override, 0.0)
                                  : cplx(p.V2, 0.0) / scale;
  return m;
}

EnergyLevel level_from(const PotentialParams& p, int n, int l,
                       const Machinery& m) {
  const WsLevel core = ws_level(n, m.beta, m.gamma, p.q);
  EnergyLevel lv;
  lv.n = n;
  lv.l = l;
  lv.variant = p.variant;
  lv.bracket = core.bracket;
  lv.eps = core.eps;
  lv.nu = core.nu;
  lv.energy = energy_from_eps(p, core.eps);
  return lv;
}

void flag_hermitian(EnergyLevel& lv, const PotentialParams& p,
                    const Machinery& m) {
  if (!(lv.eps.real() > 0.0))
    lv.admissibility_reasons.push_back("eps-positive");
  if (!(lv.energy.real() < 0.0))
    lv.admissibility_reasons.push_back("energy-negative");
  if (lambda_closure_gap(ws_level(lv.n, m.beta, m.gamma, p.q), m.beta,
                         m.gamma, p.q) > 1e-10)
    lv.admissibility_reasons.push_back("lambda-closure");
  lv.admissible = lv.admissibility_reasons.empty();
}

void flag_complex_variant(EnergyLevel& lv, const PotentialParams& p) {
  const double bound = positive_spectrum_bound(p).real();
  if (!(static_cast<double>(lv.n) < bound))
    lv.admissibility_reasons.push_back("n-bound");
  lv.admissible = lv.admissibility_reasons.empty();
}

}  // namespace

EnergyLevel energy_hermitian_s(int n, const PotentialParams& p) {
  if (p.variant != Variant::hermitian)
    throw Error("variant-mismatch", "energy_hermitian_s requires hermitian");
  const Machinery m = machinery_of(p);
  EnergyLevel lv = level_from(p, n, 0, m);
  flag_hermitian(lv, p, m);
  return lv;
}

EnergyLevel energy_hermitian_l(int n, int l, const PotentialParams& p) {
  if (p.variant != Variant::hermitian)
    throw Error("variant-mismatch", "energy_hermitian_l requires hermitian");
  if (l < 0) throw Error("invalid-params", "l must be >= 0");
  const Machinery m =
      machinery_of(p, static_cast<double>(l) * (l + 1.0));
  EnergyLevel lv = level_from(p, n, l, m);
  flag_hermitian(lv, p, m);
  return lv;
}

EnergyLevel energy_pt(int n, const PotentialParams& p) {
  if (p.variant != Variant::pt_symmetric)
    throw Error("variant-mismatch", "energy_pt requires the pt variant");
  const Machinery m = machinery_of(p);
  EnergyLevel lv = level_from(p, n, 0, m);
  flag_complex_variant(lv, p);
  return lv;
}

EnergyLevel energy_nonpt(int n, const PotentialParams& p) {
  if (p.variant != Variant::non_pt)
    throw Error("variant-mismatch", "energy_nonpt requires the nonpt variant");
  const Machinery m = machinery_of(p);
  EnergyLevel lv = level_from(p, n, 0, m);
  flag_complex_variant(lv, p);
  return lv;
}

std::vector<EnergyLevel> enumerate_levels(const PotentialParams& p, int l,
                                          int n_max) {
  if (n_max < 0 || n_max > 1000)
    throw Error("invalid-params", "n_max must be in [0, 1000]");
  if (l != 0 && p.variant != Variant::hermitian)
    throw Error("invalid-params", "l != 0 requires the hermitian variant");
  std::vector<EnergyLevel> out;
  out.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    if (p.variant == Variant::hermitian)
      out.push_back(l == 0 ? energy_hermitian_s(n, p)
                           : energy_hermitian_l(n, l, p));
    else if (p.variant == Variant::pt_symmetric)
      out.push_back(energy_pt(n, p));
    else
      out.push_back(energy_nonpt(n, p));
  }
  return out;
}

cplx positive_spectrum_bound(const PotentialParams& p) {
  const double aI2 = p.alpha_I * p.alpha_I;
  const cplx v1 = p.v1_effective();
  const cplx inner =
      (v1 / p.q - p.V2 / (p.q * p.q)) / (p.hbar2_over_2m * aI2);
  const cplx disc =
      principal_sqrt(cplx(1.0) - p.V2 / (p.hbar2_over_2m * aI2 * p.q * p.q));
  return principal_sqrt(inner) - 0.5 * (1.0 + disc);
}

double lambda_closure_gap(const WsLevel& level, cplx beta, cplx gamma,
                          double q) {
  const NUProblem prob = make_nu_problem(level.eps, beta, gamma, q);
  const auto candidates = all_candidates(prob);

  // The candidate carrying the signed root nu is the one matching the
  // conventional branch pattern evaluated at nu:
  //   k = -beta - q delta nu, pi = nu - (q/2)(1 + 2 nu + delta) s.
  const cplx delta = principal_sqrt(1.0 + 4.0 * gamma / (q * q));
  const cplx k_target = -beta - q * delta * level.nu;
  const cplx pi0_target = level.nu;
  const cplx pi1_target = -q / 2.0 * (1.0 + 2.0 * level.nu + delta);
  const PiCandidate* chosen = nullptr;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& cand : candidates) {
    const double d = std::abs(cand.k - k_target) +
                     std::abs(cand.pi.c0 - pi0_target) +
                     std::abs(cand.pi.c1 - pi1_target);
    if (d < best) {
      best = d;
      chosen = &cand;
    }
  }
  const NUBranch branch = make_branch(prob, *chosen);
  const cplx lam_n = lambda_quantized(branch, level.n, prob.sigma);
  const double scale =
      std::max({1.0, std::abs(branch.lambda), std::abs(lam_n)});
  return std::abs(branch.lambda - lam_n) / scale;
}

double lambda_closure_gap(const EnergyLevel& level, const PotentialParams& p) {
  const double g_eff =
      (p.variant == Variant::hermitian && level.l != 0)
          ? static_cast<double>(level.l) * (level.l + 1.0)
          : -1.0;
  const cplx scale = p.hbar2_over_2m * p.alpha2_signed();
  const cplx beta = p.v1_effective() / scale;
  const cplx gamma = g_eff >= 0.0 ? cplx(g_eff) : cplx(p.V2) / scale;
  WsLevel core;
  core.n = level.n;
  core.bracket = level.bracket;
  core.eps = level.eps;
  core.nu = level.nu;
  return lambda_closure_gap(core, beta, gamma, p.q);
}

}  // namespace wsnu
