#include "wsnu/model.hpp"

namespace wsnu {

const char* to_string(Variant v) {
  switch (v) {
    case Variant::hermitian: return "hermitian";
    case Variant::pt_symmetric: return "pt";
    case Variant::non_pt: return "nonpt";
  }
  return "?";
}

void PotentialParams::validate() const {
  if (!(q >= 1.0)) throw Error("invalid-params", "q must be >= 1");
  if (!(a > 0.0)) throw Error("invalid-params", "a must be > 0");
  if (!(hbar2_over_2m > 0.0))
    throw Error("invalid-params", "hbar2_over_2m must be > 0");
  if (!(A > 0.0)) throw Error("invalid-params", "mass number must be > 0");
  if (!(R0() > 0.0)) throw Error("invalid-params", "R0 = r0 A^(1/3) must be > 0");
  if (variant != Variant::hermitian && !(alpha_I > 0.0))
    throw Error("invalid-params", "alpha_I must be > 0 for complex variants");
  if (variant == Variant::hermitian && V2 < 0.0)
    throw Error("invalid-params", "V2 must be >= 0");
}

DimensionlessParams dimensionless(const PotentialParams& p, cplx E) {
  const double a2 = p.alpha2_signed();
  const cplx scale = p.hbar2_over_2m * a2;  // hbar^2 alpha^2 / 2m, signed
  DimensionlessParams d;
  d.eps = -E / scale;
  d.beta = p.v1_effective() / scale;
  d.gamma = p.V2 / scale;
  d.delta = principal_sqrt(1.0 + 4.0 * d.gamma / (p.q * p.q));
  d.eta = 1.0 + d.delta;
  d.mu = d.eta / 2.0;
  d.threshold = (E == cplx(0.0));
  return d;
}

cplx energy_from_eps(const PotentialParams& p, cplx eps) {
  return -p.hbar2_over_2m * p.alpha2_signed() * eps;
}

double potential_real(double r, const PotentialParams& p) {
  const double z = (r - p.R0()) / p.a;
  // u = t/(1+qt) = 1/(e^z + q); e^z overflow gives u -> 0 naturally
  const double u = 1.0 / (std::exp(z) + p.q);
  return -p.V1 * u + p.V2 * u * u;
}

double effective_barrier_strength(const PotentialParams& p, int l) {
  if (l < 0) throw Error("invalid-params", "l must be >= 0");
  const double alpha = p.alpha();
  return static_cast<double>(l) * (l + 1.0) * p.hbar2_over_2m * alpha * alpha;
}

double effective_potential_l(double r, const PotentialParams& p, int l) {
  const double z = (r - p.R0()) / p.a;
  const double u = 1.0 / (std::exp(z) + p.q);
  return -p.V1 * u + effective_barrier_strength(p, l) * u * u;
}

namespace {

// (q + cos(ax) - i sin(ax)) / (1 + q^2 + 2q cos(ax)), the complex
// Woods-Saxon profile t/(1+qt) with t = exp(-i a x).
cplx profile_pt(double x, const PotentialParams& p) {
  const double c = std::cos(p.alpha_I * x);
  const double s = std::sin(p.alpha_I * x);
  const double denom = 1.0 + p.q * p.q + 2.0 * p.q * c;
  if (std::abs(denom) < 1e-12 * (1.0 + p.q * p.q))
    throw Error("potential-pole",
                "1 + q^2 + 2q cos(alpha_I x) vanishes at this x");
  return cplx(p.q + c, -s) / denom;
}

}  // namespace

cplx potential_pt(double x, const PotentialParams& p) {
  if (p.variant != Variant::pt_symmetric)
    throw Error("variant-mismatch", "potential_pt requires the pt variant");
  const cplx u = profile_pt(x, p);
  return -p.V1 * u + p.V2 * u * u;
}

cplx potential_nonpt(double x, const PotentialParams& p) {
  if (p.variant != Variant::non_pt)
    throw Error("variant-mismatch", "potential_nonpt requires the nonpt variant");
  const cplx u = profile_pt(x, p);
  return -cplx(0.0, p.V1I) * u + p.V2 * u * u;
}

NUProblem make_nu_problem(cplx eps, cplx beta, cplx gamma, double q) {
  const Poly2 sigma(0.0, 1.0, -q);
  const Poly2 tau_tilde(1.0, -q, 0.0);
  const Poly2 sigma_tilde(-eps, 2.0 * eps * q - beta,
                          -eps * q * q + beta * q - gamma);
  return NUProblem(sigma, sigma_tilde, tau_tilde);
}

double alpha_from_width(double q, double R0) { return (q + 1.0) / R0; }

}  // namespace wsnu
