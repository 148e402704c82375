#ifndef WSNU_NU_HPP
#define WSNU_NU_HPP

#include <array>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "wsnu/poly.hpp"

namespace wsnu {

// Engine for equations of hypergeometric type,
//
//   psi'' + (tau_tilde/sigma) psi' + (sigma_tilde/sigma^2) psi = 0,
//
// with sigma, sigma_tilde of degree <= 2 and tau_tilde of degree <= 1.
// The reduction produces, for a constant k that makes the expression under
// the square root of
//
//   pi(s) = (sigma' - tau_tilde)/2 +- sqrt(((sigma'-tau_tilde)/2)^2
//                                          - sigma_tilde + k sigma)
//
// a perfect square, a linear pi(s), tau = tau_tilde + 2 pi with negative
// slope, lambda = k + pi', and the eigenvalue condition
// lambda_n = -n tau' - n(n-1)/2 sigma''. All arithmetic is complex double;
// coefficients of the potential family this serves are degree <= 2, so closed
// forms are exact up to rounding. Conditioning caveat: the k equation is
// quadratic in coefficients that can dwarf the result (very deep wells),
// so eigenvalue-identity residuals grow like eps_machine times the squared
// coefficient ratio; around beta ~ 5e3 that is ~1e-10 relative.

/// The polynomial triple defining the equation.
struct NUProblem {
  Poly2 sigma;
  Poly2 sigma_tilde;
  Poly2 tau_tilde;

  NUProblem(Poly2 sig, Poly2 sig_t, Poly2 tau_t)
      : sigma(sig), sigma_tilde(sig_t), tau_tilde(tau_t) {
    if (sigma.max_coeff() == 0.0)
      throw Error("invalid-problem", "sigma is identically zero");
    if (tau_tilde.degree() > 1)
      throw Error("invalid-problem", "tau_tilde has degree > 1");
  }
};

/// One (k, pi) combination prior to the slope rule.
struct PiCandidate {
  cplx k;
  Poly2 pi;  // degree <= 1
};

/// A resolved branch: k, pi, tau = tau_tilde + 2 pi, lambda = k + pi'.
struct NUBranch {
  cplx k;
  Poly2 pi;
  Poly2 tau;
  cplx lambda;
  bool tau_slope_negative = false;
};

/// Roots k of the vanishing-discriminant condition. Returned as
/// (plus-root, minus-root) of the quadratic in k; they may coincide.
/// Throws "k-unsolvable" when the condition does not determine k.
std::pair<cplx, cplx> solve_k(const NUProblem& problem);

/// The two sign choices of pi for a given k (IDENTICAL when the square
/// root vanishes). k must make the radicand a perfect square.
std::vector<Poly2> pi_candidates(const NUProblem& problem, cplx k);

/// All (k, pi) combinations in canonical order: minus k-root before plus
/// k-root, minus sign of the root before plus. The first entry is the
/// branch with the conventional sign pattern for the Woods-Saxon family.
std::vector<PiCandidate> all_candidates(const NUProblem& problem);

/// Completes a candidate into a branch (tau, lambda, slope flag).
NUBranch make_branch(const NUProblem& problem, const PiCandidate& cand);

/// Applies the negative-slope rule, Re(tau') < 0, over the candidates in
/// the order given; the first qualifying candidate wins (ties between
/// several qualifying candidates are broken by that canonical order).
/// Throws NoAdmissibleBranch with every candidate slope when none qualify.
NUBranch select_branch(const NUProblem& problem,
                       const std::vector<PiCandidate>& candidates);

/// lambda_n = -n tau' - n(n-1)/2 sigma''.
cplx lambda_quantized(const NUBranch& branch, int n, const Poly2& sigma);

/// Exponents (p, r) with rho(s) = s^p (1 - q s)^r solving (sigma rho)' =
/// tau rho, for sigma = c1 s (1 - q s). Throws "unsupported-sigma" when
/// sigma does not have two distinct roots with one at the origin.
std::pair<cplx, cplx> pearson_weight_exponents(const NUBranch& branch,
                                               const Poly2& sigma);

/// Max relative residual of (sigma rho)' - tau rho over a test grid in s,
/// for rho = s^p (1 - q s)^r. Used by tests and the verify suite.
double pearson_residual(const NUBranch& branch, const Poly2& sigma, cplx p,
                        cplx r, const std::vector<cplx>& grid);

/// Degree-n polynomial from the Rodrigues relation with weight
/// s^p (1 - q s)^r and normalization B_n = 1/n!, computed by exact
/// differentiation of the coefficient array. Coefficients ascending in s.
/// With these conventions the result equals the Jacobi polynomial
/// P_n^(p, r)(1 - 2 q s). n > 12 throws "rodrigues-depth".
Eigen::VectorXcd rodrigues_polynomial(int n, const Poly2& sigma, cplx p,
                                      cplx r);

}  // namespace wsnu

#endif
