// Acceptance suite: one test case per release criterion, each printing a
// PASS/FAIL line so the run reads as a checklist.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "wsnu/figures.hpp"
#include "wsnu/oracle.hpp"
#include "wsnu/wavefn.hpp"

using namespace wsnu;

namespace {

void report(int id, const char* what, bool ok) {
  std::printf("[acceptance] %d %-38s %s\n", id, what, ok ? "PASS" : "FAIL");
  CHECK_MESSAGE(ok, "criterion ", id, ": ", what);
}

std::vector<cplx> residual_grid(double q) {
  std::vector<cplx> g;
  for (int i = 0; i <= 60; ++i) {
    const double s = 0.05 + (0.9 - 0.05) * i / 60.0;
    if (std::abs(s - 1.0 / q) < 5e-3) continue;
    g.emplace_back(s, 0.0);
  }
  return g;
}

}  // namespace

TEST_CASE("1: closed-form s-wave ladder (a=1, q=1, V2=0)") {
  PotentialParams p;
  bool ok = true;
  for (double v1 : {1.0, 5.0, 50.0}) {
    p.V1 = v1;
    for (int n = 0; n <= 10; ++n) {
      const double expect =
          -std::pow((n + 1.0) + 2.0 * v1 / (n + 1.0), 2) / 8.0;
      const double got = energy_hermitian_s(n, p).energy.real();
      ok = ok && std::abs(got - expect) <= 1e-12 * std::abs(expect);
    }
  }
  report(1, "s-wave ladder identity", ok);
}

TEST_CASE("2: lambda closure across a 200-point parameter sweep") {
  std::mt19937 rng(20240901);
  std::uniform_real_distribution<double> uv(0.5, 60.0), uq(1.0, 5.0),
      ua(0.3, 2.0), ui(0.5, 3.0), ul(0.0, 4.99);
  bool ok = true;
  int checked = 0;
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    PotentialParams p;
    p.V1 = uv(rng);
    p.V2 = 0.1 * uv(rng);
    p.q = uq(rng);
    p.a = ua(rng);
    p.alpha_I = ui(rng);
    p.V1I = uv(rng);
    const int n = t % 7;
    EnergyLevel lv;
    switch (t % 4) {
      case 0:
        lv = energy_hermitian_s(n, p);
        break;
      case 1:
        lv = energy_hermitian_l(n, 1 + static_cast<int>(ul(rng)), p);
        break;
      case 2:
        p.variant = Variant::pt_symmetric;
        lv = energy_pt(n, p);
        break;
      default:
        p.variant = Variant::non_pt;
        lv = energy_nonpt(n, p);
        break;
    }
    if (!lv.admissible) continue;
    ++checked;
    const double gap = lambda_closure_gap(lv, p);
    worst = std::max(worst, gap);
    ok = ok && gap <= 1e-10;
  }
  ok = ok && checked >= 100;  // the sweep has to exercise real levels
  std::printf("[acceptance] 2 details: %d admissible levels, worst gap %.2e\n",
              checked, worst);
  report(2, "lambda closure (four variants)", ok);
}

TEST_CASE("3: reduced-equation residual and sign discrimination") {
  bool ok = true;
  double worst_good = 0.0, best_bad = 1e300;
  for (double beta : {1.0, 2.0})
    for (double gamma : {1.0, 2.0})
      for (double q : {1.0, 2.0})
        for (int n = 0; n <= 4; ++n) {
          const auto grid = residual_grid(q);
          const double good =
              ode_residual(assemble_ws_dimensionless(n, beta, gamma, q), grid)
                  .max_rel;
          const double bad =
              ode_residual(
                  assemble_ws_dimensionless(n, beta, gamma, q, true), grid)
                  .max_rel;
          worst_good = std::max(worst_good, good);
          best_bad = std::min(best_bad, bad);
          ok = ok && good <= 1e-9 && bad >= 1e-3;
        }
  std::printf("[acceptance] 3 details: closing %.2e, opposite sign %.2e\n",
              worst_good, best_bad);
  report(3, "residual closes; wrong sign detected", ok);
}

TEST_CASE("4: reality threshold of the complex-steepness variant") {
  bool ok = true;
  for (auto [ai, q] : {std::pair{1.0, 1.0}, std::pair{2.0, 3.0}}) {
    PotentialParams p;
    p.variant = Variant::pt_symmetric;
    p.alpha_I = ai;
    p.q = q;
    p.V1 = 15.0 * ai * ai * q;  // keeps low n admissible past the threshold
    const double v2_star = ai * ai * q * q / 8.0;
    for (double f : {0.25, 0.75, 1.0}) {
      p.V2 = f * v2_star;
      for (const auto& lv : enumerate_levels(p, 0, 4))
        if (lv.admissible) ok = ok && lv.energy.imag() == 0.0;
    }
    for (double f : {1.25, 2.0}) {
      p.V2 = f * v2_star;
      int complex_admissible = 0;
      for (const auto& lv : enumerate_levels(p, 0, 4))
        if (lv.admissible) {
          ok = ok && std::abs(lv.energy.imag()) > 0.0;
          ++complex_admissible;
        }
      ok = ok && complex_admissible > 0;
    }
  }
  report(4, "Im E = 0 iff V2 <= alpha_I^2 q^2/8", ok);
}

TEST_CASE("5: admissible-n bound at V2 = 0") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> uv(0.5, 30.0), ui(0.5, 3.0),
      uq(1.0, 4.0);
  bool ok = true;
  for (int t = 0; t < 20; ++t) {
    PotentialParams p;
    p.variant = Variant::pt_symmetric;
    p.V1 = uv(rng);
    p.alpha_I = ui(rng);
    p.q = uq(rng);
    // direct inequality: n < sqrt(2 m V1/(hbar^2 alpha_I^2 q)) - 1
    const double bound =
        std::sqrt(p.V1 / (p.hbar2_over_2m * p.alpha_I * p.alpha_I * p.q)) -
        1.0;
    for (int n = 0; n <= 12; ++n)
      ok = ok && (energy_pt(n, p).admissible == (n < bound));
  }
  report(5, "admissibility equals the direct bound", ok);
}

TEST_CASE("6: numeric-solver self-test on the box spectrum") {
  const double pi = std::numbers::pi;
  const RadialGrid box{0.0, pi, pi / 2000.0};
  auto zero = [](double) { return 0.0; };
  bool ok = true;

  const auto fd = fd_spectrum_fn(zero, 0.5, box, 3);
  for (int k = 0; k < 3; ++k) {
    const double exact = (k + 1.0) * (k + 1.0) / 2.0;
    ok = ok && std::abs(fd.levels[k].energy - exact) <= 1e-4 * exact;
  }
  const std::array<std::pair<double, double>, 3> brackets{
      {{0.4, 0.6}, {1.8, 2.2}, {4.2, 4.8}}};
  for (int k = 0; k < 3; ++k) {
    const double exact = (k + 1.0) * (k + 1.0) / 2.0;
    const double e = numerov_eigenvalue_fn(zero, 0.5, box, brackets[k].first,
                                           brackets[k].second);
    ok = ok && std::abs(e - exact) <= 1e-6 * exact;
  }
  const RadialGrid c2{0.0, pi, pi / 400.0};
  const double ord2 = measure_convergence_order(zero, 0.5, c2, 0, "fd2");
  const RadialGrid c4{0.0, pi, pi / 100.0};
  const double ord4 =
      measure_convergence_order(zero, 0.5, c4, 0, "numerov", 0.4, 0.6);
  ok = ok && std::abs(ord2 - 2.0) <= 0.5 && std::abs(ord4 - 4.0) <= 0.5;
  std::printf("[acceptance] 6 details: orders %.2f and %.2f\n", ord2, ord4);
  report(6, "box levels to 1e-4/1e-6; orders 2 and 4", ok);
}

TEST_CASE("7: recurrence vs Rodrigues agreement") {
  const Poly2 sigma(0.0, 1.0, -1.0);
  bool ok = true;
  for (double a : {0.5, 1.0, 1.618, 3.0})
    for (double b : {0.5, 1.0, 1.618, 3.0})
      for (int n = 0; n <= 8; ++n) {
        const auto coeffs = rodrigues_polynomial(n, sigma, cplx(a), cplx(b));
        double gap = 0.0, scale = 1.0;
        for (int i = 0; i < 20; ++i) {
          const double s = 0.025 + 0.95 * i / 19.0;
          cplx poly = 0.0;
          for (int j = n; j >= 0; --j) poly = poly * s + coeffs[j];
          const cplx jac =
              jacobi_eval(n, cplx(a), cplx(b), cplx(1.0 - 2.0 * s));
          gap = std::max(gap, std::abs(poly - jac));
          scale = std::max(scale, std::abs(jac));
        }
        ok = ok && gap / scale <= 1e-10;
      }
  report(7, "polynomial routes agree to 1e-10", ok);
}

TEST_CASE("8: figure data regeneration") {
  bool ok = true;
  for (int fig = 1; fig <= 4; ++fig) {
    const std::string pass1 = figure_csv(fig);
    const std::string pass2 = figure_csv(fig);
    ok = ok && pass1 == pass2 && !pass1.empty();
    std::ofstream("acceptance_fig" + std::to_string(fig) + ".csv")
        << pass1;
  }
  // spot values at r = R0 (row 160 of figure 1)
  std::istringstream in(figure_csv(1));
  std::string line;
  for (int i = 0; i <= 161; ++i) std::getline(in, line);
  double r = 0.0, v1 = 0.0, v3 = 0.0, v7 = 0.0;
  char c;
  std::istringstream row(line);
  row >> r >> c >> v1 >> c >> v3 >> c >> v7;
  ok = ok && std::abs(v1 - (-22.5)) <= 1e-10 * 22.5;
  ok = ok && std::abs(v3 - (-11.875)) <= 1e-10 * 11.875;
  report(8, "figure CSVs stable with spot values", ok);
}

TEST_CASE("9: closed-form vs numeric comparison report") {
  PotentialParams p;  // deep well, atomic units
  p.V1 = 50.0;
  p.r0 = 15.0;
  const RadialGrid g = RadialGrid::for_potential(p);
  const auto levels = enumerate_levels(p, 0, 3);

  auto run = [&] {
    const auto numeric = fd_spectrum(p, 0, g, 4, 0.0);
    return compare_report(levels, numeric).to_csv();
  };
  const std::string csv1 = run();
  const std::string csv2 = run();
  std::ofstream("acceptance_compare.csv") << csv1;

  bool ok = csv1 == csv2;
  ok = ok && csv1.rfind("n,E_nu,E_numeric,abs_gap,rel_gap,admissible,notes\n",
                        0) == 0;
  ok = ok && csv1.find("-1275.125") != std::string::npos;
  // the gap itself carries no tolerance; it only has to be reported
  report(9, "comparison report generated deterministically", ok);
}
