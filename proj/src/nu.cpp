#include "wsnu/nu.hpp"

#include <cmath>
#include <initializer_list>

namespace wsnu {

namespace {

// Dot product with exact fma product residuals and Neumaier summation,
// accurate to ~1 ulp of the true sum even under near-total cancellation.
double compensated_dot(std::initializer_list<std::pair<double, double>> xs) {
  double sum = 0.0, comp = 0.0;
  auto add = [&](double v) {
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  };
  for (const auto& [x, y] : xs) {
    const double p = x * y;
    add(p);
    add(std::fma(x, y, -p));
  }
  return sum + comp;
}

// qb^2 - 4 qa qc for complex coefficients. The naive expression loses the
// entire result to cancellation for deep wells (qb^2 ~ beta^2 while the
// true discriminant is ~16 eps delta^2 q^2).
cplx quadratic_discriminant(cplx qa, cplx qb, cplx qc) {
  const double re = compensated_dot({{qb.real(), qb.real()},
                                     {-qb.imag(), qb.imag()},
                                     {-4.0 * qa.real(), qc.real()},
                                     {4.0 * qa.imag(), qc.imag()}});
  const double im = compensated_dot({{2.0 * qb.real(), qb.imag()},
                                     {-4.0 * qa.real(), qc.imag()},
                                     {-4.0 * qa.imag(), qc.real()}});
  return {re, im};
}

// Radicand of the pi equation as a polynomial in s whose coefficients are
// affine in k: P(s; k) = (A2 + k a2) s^2 + (A1 + k a1) s + (A0 + k a0).
struct Radicand {
  std::array<cplx, 3> base;   // A0, A1, A2
  std::array<cplx, 3> slope;  // sigma coefficients a0, a1, a2
};

Radicand radicand_of(const NUProblem& p) {
  // h(s) = (sigma' - tau_tilde)/2, degree <= 1
  const Poly2 h = (p.sigma.derivative() - p.tau_tilde) * cplx(0.5);
  // h^2 - sigma_tilde
  Radicand r;
  r.base = {h.c0 * h.c0 - p.sigma_tilde.c0,
            2.0 * h.c0 * h.c1 - p.sigma_tilde.c1,
            h.c1 * h.c1 - p.sigma_tilde.c2};
  r.slope = {p.sigma.c0, p.sigma.c1, p.sigma.c2};
  return r;
}

std::array<cplx, 3> radicand_at(const Radicand& r, cplx k) {
  return {r.base[0] + k * r.slope[0], r.base[1] + k * r.slope[1],
          r.base[2] + k * r.slope[2]};
}

double radicand_scale(const Radicand& r) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    s = std::max({s, std::abs(r.base[i]), std::abs(r.slope[i])});
  return s;
}

}  // namespace

std::pair<cplx, cplx> solve_k(const NUProblem& problem) {
  const Radicand r = radicand_of(problem);
  // Discriminant of P(s; k) in s: (A1 + k a1)^2 - 4 (A2 + k a2)(A0 + k a0),
  // a quadratic in k.
  const cplx qa = r.slope[1] * r.slope[1] - 4.0 * r.slope[2] * r.slope[0];
  const cplx qb = 2.0 * r.base[1] * r.slope[1] -
                  4.0 * (r.base[2] * r.slope[0] + r.base[0] * r.slope[2]);
  const cplx qc = r.base[1] * r.base[1] - 4.0 * r.base[2] * r.base[0];

  const double scale =
      std::max({std::abs(qa), std::abs(qb), std::abs(qc), 1.0});
  if (near_zero(qa, scale, 1e-14)) {
    if (near_zero(qb, scale, 1e-14))
      throw Error("k-unsolvable",
                  "discriminant condition does not depend on k");
    const cplx k = -qc / qb;
    return {k, k};
  }
  const cplx disc = principal_sqrt(quadratic_discriminant(qa, qb, qc));
  return {(-qb + disc) / (2.0 * qa), (-qb - disc) / (2.0 * qa)};
}

std::vector<Poly2> pi_candidates(const NUProblem& problem, cplx k) {
  const Radicand r = radicand_of(problem);
  const auto [c0, c1, c2] = radicand_at(r, k);
  const double scale = std::max(radicand_scale(r) * std::max(1.0, std::abs(k)),
                                1.0);

  // P(s; k) must be the square of a linear polynomial w(s) = w1 s + w0.
  // The square root is taken at the better-conditioned end and the other
  // coefficient recovered from the cross term; taking sqrt of a
  // cancellation-level coefficient would lose half the digits.
  cplx w1, w0;
  if (std::abs(c2) < 1e-14 * scale && std::abs(c0) < 1e-14 * scale) {
    w1 = 0.0;
    w0 = 0.0;
  } else if (std::abs(c2) >= std::abs(c0)) {
    w1 = principal_sqrt(c2);
    w0 = c1 / (2.0 * w1);
  } else {
    w0 = principal_sqrt(c0);
    w1 = c1 / (2.0 * w0);
  }
  if (!near_zero(2.0 * w1 * w0 - c1, scale, 1e-9) ||
      !near_zero(w1 * w1 - c2, scale, 1e-9) ||
      !near_zero(w0 * w0 - c0, scale, 1e-9))
    throw Error("not-perfect-square",
                "radicand is not a perfect square for this k");

  const Poly2 h = (problem.sigma.derivative() - problem.tau_tilde) * cplx(0.5);
  const Poly2 w(w0, w1, 0.0);
  return {h + w, h - w};
}

std::vector<PiCandidate> all_candidates(const NUProblem& problem) {
  const auto [k_plus, k_minus] = solve_k(problem);
  std::vector<PiCandidate> out;
  for (cplx k : {k_minus, k_plus}) {
    const auto pis = pi_candidates(problem, k);
    out.push_back({k, pis[1]});  // minus sign first
    out.push_back({k, pis[0]});
  }
  return out;
}

NUBranch make_branch(const NUProblem& problem, const PiCandidate& cand) {
  NUBranch b;
  b.k = cand.k;
  b.pi = cand.pi;
  b.tau = problem.tau_tilde + cplx(2.0) * cand.pi;
  b.lambda = cand.k + cand.pi.derivative().c0;
  b.tau_slope_negative = b.tau.c1.real() < 0.0;
  return b;
}

NUBranch select_branch(const NUProblem& problem,
                       const std::vector<PiCandidate>& candidates) {
  std::vector<cplx> slopes;
  for (const auto& cand : candidates) {
    NUBranch b = make_branch(problem, cand);
    if (b.tau_slope_negative) return b;
    slopes.push_back(b.tau.c1);
  }
  throw NoAdmissibleBranch("no candidate has Re(tau') < 0", slopes);
}

cplx lambda_quantized(const NUBranch& branch, int n, const Poly2& sigma) {
  if (n < 0) throw Error("invalid-n", "quantum number must be >= 0");
  const double nn = static_cast<double>(n);
  return -nn * branch.tau.c1 - nn * (nn - 1.0) / 2.0 * (2.0 * sigma.c2);
}

namespace {

// sigma = c1 s (1 - q s) with q = -c2/c1; rejects anything else.
std::pair<cplx, cplx> sigma_factor(const Poly2& sigma) {
  const double scale = sigma.max_coeff();
  if (!near_zero(sigma.c0, scale, 1e-12) || near_zero(sigma.c1, scale, 1e-12))
    throw Error("unsupported-sigma",
                "sigma must vanish at the origin with a simple root");
  if (near_zero(sigma.c2, scale, 1e-12))
    throw Error("unsupported-sigma",
                "sigma must have two distinct roots (degree 2)");
  return {sigma.c1, -sigma.c2 / sigma.c1};  // (c1, q)
}

}  // namespace

std::pair<cplx, cplx> pearson_weight_exponents(const NUBranch& branch,
                                               const Poly2& sigma) {
  const auto [c1, q] = sigma_factor(sigma);
  // (sigma rho)' = tau rho with rho = s^p (1 - q s)^r reduces to
  //   c1 p = tau0 - c1  and  -c1 q (p + r) = tau1 - 2 c2.
  const cplx p = branch.tau.c0 / c1 - 1.0;
  const cplx sum = (branch.tau.c1 - 2.0 * sigma.c2) / sigma.c2;
  return {p, sum - p};
}

double pearson_residual(const NUBranch& branch, const Poly2& sigma, cplx p,
                        cplx r, const std::vector<cplx>& grid) {
  const auto [c1, q] = sigma_factor(sigma);
  (void)c1;
  double worst = 0.0;
  for (cplx s : grid) {
    // (sigma rho)'/rho = sigma' + sigma (p/s - r q/(1 - q s))
    const cplx lhs = sigma.derivative().eval(s) +
                     sigma.eval(s) * (p / s - r * q / (1.0 - q * s));
    const cplx rhs = branch.tau.eval(s);
    const double denom = std::max({std::abs(lhs), std::abs(rhs), 1.0});
    worst = std::max(worst, std::abs(lhs - rhs) / denom);
  }
  return worst;
}

Eigen::VectorXcd rodrigues_polynomial(int n, const Poly2& sigma, cplx p,
                                      cplx r) {
  if (n < 0) throw Error("invalid-n", "degree must be >= 0");
  if (n > 12)
    throw Error("rodrigues-depth",
                "closed-form differentiation limited to n <= 12");
  const auto [c1, q] = sigma_factor(sigma);
  (void)c1;

  // d^n/ds^n [ s^(n+p) (1-qs)^(n+r) ] / (s^p (1-qs)^r), expanded exactly:
  // sum_j C(n,j) fall(n+p, j) fall(n+r, n-j) (-q)^(n-j) s^(n-j) (1-qs)^j
  auto falling = [](cplx z, int m) {
    cplx acc = 1.0;
    for (int i = 0; i < m; ++i) acc *= z - static_cast<double>(i);
    return acc;
  };
  auto binom = [](int a, int b) {
    double acc = 1.0;
    for (int i = 1; i <= b; ++i) acc = acc * (a - b + i) / i;
    return acc;
  };
  auto ipow = [](cplx z, int m) {
    cplx acc = 1.0;
    for (int i = 0; i < m; ++i) acc *= z;
    return acc;
  };

  Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(n + 1);
  for (int j = 0; j <= n; ++j) {
    cplx term = binom(n, j) * falling(p + static_cast<double>(n), j) *
                falling(r + static_cast<double>(n), n - j) * ipow(-q, n - j);
    // times s^(n-j) (1-qs)^j, binomially expanded
    for (int i = 0; i <= j; ++i)
      coeffs[n - j + i] += term * binom(j, i) * ipow(-q, i);
  }
  double nfact = 1.0;
  for (int i = 2; i <= n; ++i) nfact *= i;
  return coeffs / nfact;
}

}  // namespace wsnu
