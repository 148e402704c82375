#include "wsnu/wavefn.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

namespace wsnu {

namespace {

// R = F1 F2 F3 with F1 = exp(nu log_s), F2 = (1 - q_base s)^eta_half,
// F3 = P_n^(a,b)(1 - 2 q_arg s). log_s is passed explicitly so the x-form
// can keep the branch continuous.
std::array<cplx, 3> derivs_from_log(const Eigenfunction& f, cplx log_s) {
  const cplx s = std::exp(log_s);
  const cplx f1 = std::exp(f.nu * log_s);
  const cplx f1p = f.nu * f1 / s;
  const cplx f1pp = f.nu * (f.nu - 1.0) * f1 / (s * s);

  const cplx base = 1.0 - f.q_base * s;
  const cplx lbase = std::log(base);
  const cplx f2 = std::exp(f.eta_half * lbase);
  const cplx f2p = -f.q_base * f.eta_half * f2 / base;
  const cplx f2pp =
      f.q_base * f.q_base * f.eta_half * (f.eta_half - 1.0) * f2 / (base * base);

  const cplx arg = 1.0 - 2.0 * f.q_arg * s;
  const cplx a = f.jacobi.a_param, b = f.jacobi.b_param;
  const int n = f.jacobi.n;
  const cplx p0 = jacobi_eval(n, a, b, arg);
  const cplx p1 = jacobi_derivative(n, a, b, arg) * (-2.0 * f.q_arg);
  const cplx p2 =
      jacobi_second_derivative(n, a, b, arg) * (4.0 * f.q_arg * f.q_arg);

  const cplx r = f1 * f2 * p0;
  const cplx rp = f1p * f2 * p0 + f1 * f2p * p0 + f1 * f2 * p1;
  const cplx rpp = f1pp * f2 * p0 + f1 * f2pp * p0 + f1 * f2 * p2 +
                   2.0 * (f1p * f2p * p0 + f1p * f2 * p1 + f1 * f2p * p1);
  return {r, rp, rpp};
}

}  // namespace

std::array<cplx, 3> Eigenfunction::derivatives(cplx s) const {
  return derivs_from_log(*this, std::log(s));
}

cplx Eigenfunction::value_x(double x) const {
  const cplx log_s = cplx(0.0, std::numbers::pi) - alpha * x;
  return derivs_from_log(*this, log_s)[0];
}

namespace {

struct MachinerySnapshot {
  cplx beta, gamma;
  double q;
};

MachinerySnapshot snapshot_of(const PotentialParams& p, int l) {
  const cplx scale = p.hbar2_over_2m * p.alpha2_signed();
  MachinerySnapshot m;
  m.beta = p.v1_effective() / scale;
  m.gamma = (p.variant == Variant::hermitian && l != 0)
                ? cplx(static_cast<double>(l) * (l + 1.0))
                : cplx(p.V2) / scale;
  m.q = p.q;
  return m;
}

Eigenfunction consistent_form(const EnergyLevel& level,
                              const MachinerySnapshot& m, cplx alpha) {
  const WsLevel core = ws_level(level.n, m.beta, m.gamma, m.q);
  Eigenfunction f;
  f.level = level;
  f.mode = WavefnMode::residual_consistent;
  f.nu = core.nu;
  f.eta_half = core.eta / 2.0;
  f.jacobi = {level.n, 2.0 * core.nu, core.eta - 1.0};
  f.q_base = m.q;
  f.q_arg = m.q;
  f.eps = core.eps;
  f.beta = m.beta;
  f.gamma = m.gamma;
  f.q = m.q;
  f.alpha = alpha;
  return f;
}

}  // namespace

Eigenfunction assemble_hermitian(const EnergyLevel& level,
                                 const PotentialParams& p, WavefnMode mode) {
  if (level.variant != Variant::hermitian)
    throw Error("variant-mismatch", "assemble_hermitian requires hermitian");
  const MachinerySnapshot m = snapshot_of(p, level.l);
  if (mode == WavefnMode::residual_consistent) {
    if (!level.admissible)
      throw Error("no-consistent-eigenfunction",
                  "level is flagged inadmissible");
    return consistent_form(level, m, cplx(p.alpha()));
  }
  // Literal published form: positive root, q -> 1 presentation.
  const WsLevel core = ws_level(level.n, m.beta, m.gamma, m.q);
  Eigenfunction f;
  f.level = level;
  f.mode = WavefnMode::published;
  f.nu = principal_sqrt(core.eps);
  f.eta_half = core.eta / 2.0;
  f.jacobi = {level.n, 2.0 * f.nu, core.eta - 1.0};
  f.q_base = 1.0;
  f.q_arg = 1.0;
  f.eps = core.eps;
  f.beta = m.beta;
  f.gamma = m.gamma;
  f.q = m.q;
  f.alpha = cplx(p.alpha());
  return f;
}

Eigenfunction assemble_pt(const EnergyLevel& level, const PotentialParams& p,
                          WavefnMode mode) {
  if (level.variant != Variant::pt_symmetric)
    throw Error("variant-mismatch", "assemble_pt requires the pt variant");
  const MachinerySnapshot m = snapshot_of(p, 0);
  const cplx alpha = cplx(0.0, p.alpha_I);
  if (mode == WavefnMode::residual_consistent) {
    if (!level.admissible)
      throw Error("no-consistent-eigenfunction",
                  "level is flagged inadmissible");
    return consistent_form(level, m, alpha);
  }
  // Published form with the deformation dropped (q-less exponents).
  const double aI2 = p.alpha_I * p.alpha_I;
  const cplx beta_tilde = -p.V1 / (p.hbar2_over_2m * aI2);
  const cplx gamma_tilde = -p.V2 / (p.hbar2_over_2m * aI2);
  const WsLevel tilde = ws_level(level.n, beta_tilde, gamma_tilde, 1.0);
  Eigenfunction f;
  f.level = level;
  f.mode = WavefnMode::published;
  f.nu = tilde.bracket;  // E-tilde_n
  f.eta_half = tilde.eta / 2.0;
  f.jacobi = {level.n, 2.0 * tilde.bracket, tilde.delta};
  f.q_base = 1.0;
  f.q_arg = 1.0;
  f.eps = tilde.eps;
  f.beta = beta_tilde;
  f.gamma = gamma_tilde;
  f.q = 1.0;
  f.alpha = alpha;
  return f;
}

Eigenfunction assemble_ws_dimensionless(int n, cplx beta, cplx gamma,
                                        double q, bool flip_sign) {
  const WsLevel core = ws_level(n, beta, gamma, q);
  Eigenfunction f;
  f.mode = WavefnMode::residual_consistent;
  f.level.n = n;
  f.level.bracket = core.bracket;
  f.level.eps = core.eps;
  f.level.nu = core.nu;
  f.nu = flip_sign ? core.bracket : core.nu;
  f.eta_half = core.eta / 2.0;
  f.jacobi = {n, 2.0 * f.nu, core.eta - 1.0};
  f.q_base = q;
  f.q_arg = q;
  f.eps = core.eps;
  f.beta = beta;
  f.gamma = gamma;
  f.q = q;
  f.alpha = cplx(1.0);
  return f;
}

ResidualReport ode_residual(const Eigenfunction& f,
                            const std::vector<cplx>& s_grid) {
  const double q = f.q;
  for (cplx s : s_grid) {
    if (std::abs(s) < 1e-3 || std::abs(s - 1.0 / q) < 1e-3)
      throw Error("singular-grid",
                  "grid must stay 1e-3 away from s = 0 and s = 1/q");
  }
  const cplx n2 = -f.eps * q * q + f.beta * q - f.gamma;
  const cplx n1 = 2.0 * f.eps * q - f.beta;
  const cplx n0 = -f.eps;

  ResidualReport rep;
  rep.trivial = true;
  for (cplx s : s_grid) {
    const auto [r, rp, rpp] = f.derivatives(s);
    const cplx den = s * (1.0 - q * s);
    const cplx t1 = rpp;
    const cplx t2 = rp / s;
    const cplx t3 = ((n2 * s + n1) * s + n0) / (den * den) * r;
    const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
    if (scale < 1e-280) continue;  // function vanished here
    rep.trivial = false;
    rep.max_rel = std::max(rep.max_rel, std::abs(t1 + t2 + t3) / scale);
  }
  return rep;
}

namespace {

struct GaussRule {
  Eigen::VectorXd nodes;    // on (-1, 1)
  Eigen::VectorXd weights;  // sum 2
};

// Golub-Welsch: Gauss-Legendre nodes are the eigenvalues of the symmetric
// tridiagonal Jacobi matrix, weights 2 v0^2.
GaussRule legendre_rule(int n) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    j(k - 1, k) = b;
    j(k, k - 1) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
  GaussRule rule;
  rule.nodes = es.eigenvalues();
  rule.weights = 2.0 * es.eigenvectors().row(0).array().square();
  return rule;
}

double apply_rule(const GaussRule& rule,
                  const std::function<double(double)>& fn, double a,
                  double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * fn(mid + half * rule.nodes[i]);
  return acc * half;
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& fn, double a,
                          double b, double rel_tol) {
  static const GaussRule low = legendre_rule(7);
  static const GaussRule high = legendre_rule(15);

  struct Seg {
    double a, b;
    int depth;
  };
  std::vector<Seg> stack{{a, b, 0}};
  double total = 0.0;
  while (!stack.empty()) {
    const Seg seg = stack.back();
    stack.pop_back();
    const double i_high = apply_rule(high, fn, seg.a, seg.b);
    const double i_low = apply_rule(low, fn, seg.a, seg.b);
    const double err = std::abs(i_high - i_low);
    if (err <= rel_tol * std::abs(i_high) || err < 1e-300 || seg.depth >= 48) {
      total += i_high;
      continue;
    }
    const double mid = 0.5 * (seg.a + seg.b);
    stack.push_back({seg.a, mid, seg.depth + 1});
    stack.push_back({mid, seg.b, seg.depth + 1});
  }
  return total;
}

namespace {

double check_decay_and_integrate(const std::function<cplx(double)>& fn,
                                 double x_lo, double x_hi, double rel_tol) {
  const double width = x_hi - x_lo;
  if (!(width > 0.0)) throw Error("invalid-params", "empty domain");

  const int probes = 65;
  double peak = 0.0;
  for (int i = 1; i < probes - 1; ++i) {
    const double x = x_lo + width * i / (probes - 1);
    peak = std::max(peak, std::abs(fn(x)));
  }
  const double end_lo = std::abs(fn(x_lo + 1e-6 * width));
  const double end_hi = std::abs(fn(x_hi - 1e-6 * width));
  if (!(end_lo <= 0.5 * peak) || !(end_hi <= 0.5 * peak))
    throw Error("non-normalizable",
                "no endpoint decay: |R(lo)|=" + std::to_string(end_lo) +
                    " |R(hi)|=" + std::to_string(end_hi) +
                    " peak=" + std::to_string(peak));

  return integrate_adaptive([&](double x) { return std::norm(fn(x)); }, x_lo,
                            x_hi, rel_tol);
}

}  // namespace

double normalize_numeric(const std::function<cplx(double)>& fn, double x_lo,
                         double x_hi, double rel_tol) {
  const double integral = check_decay_and_integrate(fn, x_lo, x_hi, rel_tol);
  if (!(integral > 0.0) || !std::isfinite(integral))
    throw Error("non-normalizable", "norm integral is zero or non-finite");
  return 1.0 / std::sqrt(integral);
}

cplx normalize_numeric(Eigenfunction& f, double x_lo, double x_hi,
                       double rel_tol) {
  const double d = normalize_numeric(
      [&](double x) { return f.value_x(x); }, x_lo, x_hi, rel_tol);
  f.normalization = cplx(d, 0.0);
  return f.normalization.value();
}

}  // namespace wsnu
