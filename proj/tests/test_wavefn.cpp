#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "wsnu/wavefn.hpp"

using namespace wsnu;

namespace {

std::vector<cplx> grid_for(double q, double lo = 0.05, double hi = 0.9) {
  std::vector<cplx> g;
  for (int i = 0; i <= 60; ++i) {
    const double s = lo + (hi - lo) * i / 60.0;
    if (std::abs(s - 1.0 / q) < 5e-3) continue;
    g.emplace_back(s, 0.0);
  }
  return g;
}

}  // namespace

TEST_CASE("jacobi_eval basics") {
  SUBCASE("degree zero is 1 for any parameters") {
    CHECK(jacobi_eval(0, cplx(3.0, 1.0), cplx(-0.5, 2.0), cplx(7.0)) ==
          cplx(1.0));
    CHECK(jacobi_eval(0, 0.2, 0.4, -3.0) == 1.0);
  }
  SUBCASE("P1^(2,1)(1) = 1 + a = 3") {
    CHECK(jacobi_eval(1, 2.0, 1.0, 1.0) == doctest::Approx(3.0));
  }
  SUBCASE("P2^(0,0)(0) = -1/2") {
    // flat-weight brute-force construction: (3x^2 - 1)/2 at x = 0
    CHECK(jacobi_eval(2, 0.0, 0.0, 0.0) == doctest::Approx(-0.5));
    for (double x : {-0.7, 0.1, 0.8})
      CHECK(jacobi_eval(2, 0.0, 0.0, x) ==
            doctest::Approx((3.0 * x * x - 1.0) / 2.0).epsilon(1e-14));
  }
}

TEST_CASE("recurrence agrees with the Rodrigues construction") {
  const Poly2 sigma(0.0, 1.0, -1.0);
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
        CHECK(gap / scale <= 1e-10);
      }
}

TEST_CASE("classical parameters give n roots inside (-1,1)") {
  for (int n = 1; n <= 6; ++n) {
    int changes = 0;
    double prev = jacobi_eval(n, 0.5, 1.618, -0.99995);
    for (int i = 1; i <= 8000; ++i) {
      const double x = -0.99995 + 1.9999 * i / 8000.0;
      const double v = jacobi_eval(n, 0.5, 1.618, x);
      if (prev * v < 0.0) ++changes;
      if (v != 0.0) prev = v;
    }
    CHECK(changes == n);
  }
}

TEST_CASE("residual-consistent assembly closes the reduced equation") {
  SUBCASE("ground level at beta = gamma = q = 1") {
    const auto f = assemble_ws_dimensionless(0, 1.0, 1.0, 1.0);
    CHECK(f.nu.real() ==
          doctest::Approx(-0.8090169943749475).epsilon(1e-12));
    CHECK(f.eta_half.real() ==
          doctest::Approx(1.618033988749895).epsilon(1e-12));
    CHECK(ode_residual(f, grid_for(1.0)).max_rel <= 1e-12);
  }
  SUBCASE("positive-root form does not close (reported gap)") {
    const auto f = assemble_ws_dimensionless(0, 1.0, 1.0, 1.0, true);
    const double res = ode_residual(f, grid_for(1.0)).max_rel;
    INFO("positive-root residual: ", res);
    CHECK(res > 1e-3);
  }
  SUBCASE("sweep n <= 4 over small parameter cube") {
    for (double beta : {1.0, 2.0})
      for (double gamma : {1.0, 2.0})
        for (double q : {1.0, 2.0})
          for (int n = 0; n <= 4; ++n) {
            const auto f = assemble_ws_dimensionless(n, beta, gamma, q);
            CHECK(ode_residual(f, grid_for(q)).max_rel <= 1e-9);
          }
  }
  SUBCASE("detector notices a perturbed eps") {
    auto f = assemble_ws_dimensionless(1, 1.0, 1.0, 1.0);
    f.eps *= 1.01;
    CHECK(ode_residual(f, grid_for(1.0)).max_rel > 1e-3);
  }
}

TEST_CASE("ode_residual guards") {
  const auto f = assemble_ws_dimensionless(0, 1.0, 1.0, 1.0);
  SUBCASE("grid too close to a singular point") {
    CHECK_THROWS_WITH_AS(ode_residual(f, {cplx(1e-4)}),
                         doctest::Contains("singular-grid"), Error);
    CHECK_THROWS_WITH_AS(ode_residual(f, {cplx(1.0005)}),
                         doctest::Contains("singular-grid"), Error);
  }
  SUBCASE("underflowed function reports the trivial flag") {
    auto g = f;
    g.nu = 8000.0;  // s^8000 underflows to zero on the whole grid
    g.jacobi.a_param = 16000.0;
    const auto rep = ode_residual(g, grid_for(1.0));
    CHECK(rep.trivial);
    CHECK(rep.max_rel == 0.0);
  }
}

TEST_CASE("assemble_hermitian modes") {
  PotentialParams p;  // atomic, a = 1, q = 1
  p.V1 = 0.5;         // beta = 1
  p.V2 = 0.5;         // gamma = 1
  const auto lv = energy_hermitian_s(0, p);

  SUBCASE("residual_consistent carries the signed root") {
    const auto f = assemble_hermitian(lv, p, WavefnMode::residual_consistent);
    CHECK(f.nu.real() == doctest::Approx(-0.8090169943749475));
    CHECK(f.jacobi.a_param == 2.0 * f.nu);
    CHECK(ode_residual(f, grid_for(1.0)).max_rel <= 1e-12);
  }
  SUBCASE("published keeps the principal root and 1-2s argument") {
    const auto f = assemble_hermitian(lv, p, WavefnMode::published);
    CHECK(f.nu.real() == doctest::Approx(+0.8090169943749475));
    CHECK(f.q_arg == 1.0);
    CHECK(ode_residual(f, grid_for(1.0)).max_rel > 1e-3);
  }
  SUBCASE("small-s limit follows the exponent sign") {
    const auto fneg = assemble_hermitian(lv, p, WavefnMode::residual_consistent);
    const auto fpos = assemble_hermitian(lv, p, WavefnMode::published);
    const double tiny = 1e-8;
    CHECK(std::abs(fpos.value(cplx(tiny))) < 1e-5);   // Re nu > 0 decays
    CHECK(std::abs(fneg.value(cplx(tiny))) > 1e5);    // Re nu < 0 grows
  }
}

TEST_CASE("assemble_pt") {
  PotentialParams p;
  p.variant = Variant::pt_symmetric;
  p.V1 = 1.0;
  p.alpha_I = 1.0;
  const auto lv = energy_pt(0, p);

  SUBCASE("published exponent at V2 = 0 is (1+n)/2 - V1/((1+n) alpha_I^2)") {
    const auto f = assemble_pt(lv, p, WavefnMode::published);
    CHECK(f.nu.real() == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(f.nu.imag() == 0.0);
  }
  SUBCASE("V2=0, q=1 collapse to the phase-explicit form") {
    for (int n = 0; n <= 2; ++n) {
      const auto ln = energy_pt(n, p);
      const auto f = assemble_pt(ln, p, WavefnMode::published);
      const cplx et = f.nu;
      for (int i = 1; i <= 24; ++i) {
        const double x = 0.15 + (2.0 * std::numbers::pi - 0.3) * i / 24.0;
        const cplx es = std::exp(cplx(0.0, -p.alpha_I * x));
        const cplx direct =
            std::exp(cplx(0.0, std::numbers::pi) * et) *
            std::exp(-cplx(0.0, 1.0) * p.alpha_I * et * x) * (1.0 + es) *
            jacobi_eval(n, 2.0 * et, cplx(1.0), 1.0 + 2.0 * es);
        const cplx got = f.value_x(x);
        CHECK(std::abs(direct - got) <=
              1e-12 * std::max(1.0, std::abs(direct)));
      }
    }
  }
  SUBCASE("values are complex for generic x even though E is real") {
    REQUIRE(lv.energy.imag() == 0.0);
    const auto f = assemble_pt(lv, p, WavefnMode::residual_consistent);
    CHECK(std::abs(f.value_x(0.7).imag()) > 1e-3);
  }
  SUBCASE("residual_consistent refuses inadmissible levels") {
    const auto bad = energy_pt(5, p);
    REQUIRE_FALSE(bad.admissible);
    CHECK_THROWS_WITH_AS(
        assemble_pt(bad, p, WavefnMode::residual_consistent),
        doctest::Contains("no-consistent-eigenfunction"), Error);
  }
}

TEST_CASE("adaptive quadrature and numeric normalization") {
  SUBCASE("exp(-|x|) has unit norm integral") {
    // integral of exp(-2|x|) over R is 1, so D = 1
    const double d = normalize_numeric(
        [](double x) { return cplx(std::exp(-std::abs(x))); }, -40.0, 40.0);
    CHECK(d == doctest::Approx(1.0).epsilon(1e-8));
  }
  SUBCASE("pt ground state on one period") {
    PotentialParams p;
    p.variant = Variant::pt_symmetric;
    p.V1 = 1.0;
    p.alpha_I = 1.0;
    const auto lv = energy_pt(0, p);
    auto f = assemble_pt(lv, p, WavefnMode::residual_consistent);
    // |R| = |1 + exp(-i x)| on the unit circle: norm integral 4 pi
    const cplx d = normalize_numeric(f, -std::numbers::pi, std::numbers::pi);
    CHECK(d.real() ==
          doctest::Approx(1.0 / (2.0 * std::sqrt(std::numbers::pi)))
              .epsilon(1e-8));
    CHECK(f.normalization.has_value());
  }
  SUBCASE("growing tail is refused with diagnostics") {
    PotentialParams p;
    p.V1 = 0.5;
    const auto lv = energy_hermitian_s(0, p);
    auto f = assemble_hermitian(lv, p, WavefnMode::published);
    CHECK_THROWS_WITH_AS(normalize_numeric(f, -30.0, 30.0),
                         doctest::Contains("non-normalizable"), Error);
  }
  SUBCASE("integrator handles endpoint power laws") {
    // integral of x^(-1/2) over (0, 1] = 2
    const double v = integrate_adaptive(
        [](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-10);
    CHECK(v == doctest::Approx(2.0).epsilon(1e-6));
  }
}
