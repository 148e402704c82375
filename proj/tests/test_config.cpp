#include <doctest.h>

#include <cmath>
#include <sstream>

#include "wsnu/config.hpp"
#include "wsnu/figures.hpp"

using namespace wsnu;

TEST_CASE("config round-trips through JSON") {
  RunConfig c;
  c.variant = Variant::pt_symmetric;
  c.units = "explicit";
  c.hbar2_over_2m = 20.7355;
  c.v1 = 48.5;
  c.v2 = 3.25;
  c.v1i = 0.75;
  c.q = 1.5;
  c.a = 0.65;
  c.r0 = 1.285;
  c.mass_number = 56.0;
  c.alpha_imag = 2.0;
  c.l = 0;
  c.nmax = 7;
  c.grid_rmax = 25.0;
  c.grid_h = 0.01;
  c.format = OutputFormat::json;
  c.out = "levels.json";
  CHECK(parse_config(serialize_config(c)) == c);

  RunConfig d;  // defaults round-trip too
  CHECK(parse_config(serialize_config(d)) == d);
}

TEST_CASE("unknown keys are rejected") {
  CHECK_THROWS_WITH_AS(parse_config(R"({"v1": 1.0, "vv2": 2.0})"),
                       doctest::Contains("unknown key"), Error);
  CHECK_THROWS_WITH_AS(parse_config("not json"),
                       doctest::Contains("config"), Error);
  CHECK_THROWS_WITH_AS(parse_config(R"({"variant": "weird"})"),
                       doctest::Contains("unknown variant"), Error);
}

TEST_CASE("config validation maps to the config error code") {
  RunConfig c;
  c.q = 0.2;
  try {
    c.potential();
    FAIL("expected config error");
  } catch (const Error& e) {
    CHECK(e.code() == "config");
  }
  c.q = 1.0;
  c.l = 1;
  c.variant = Variant::pt_symmetric;
  CHECK_THROWS_AS(c.potential(), Error);
}

TEST_CASE("atomic units pin hbar^2/2m to one half") {
  RunConfig c;
  c.units = "atomic";
  c.hbar2_over_2m = 99.0;  // ignored in atomic mode
  CHECK(c.potential().hbar2_over_2m == 0.5);
  c.units = "explicit";
  CHECK(c.potential().hbar2_over_2m == 99.0);
}

TEST_CASE("numeric formatting") {
  CHECK(fmt_csv(-1.125) == "-1.125");
  CHECK(fmt_csv(0.0) == "0");
  CHECK(fmt_csv(-0.0) == "0");
  CHECK(fmt_json(0.5) == "0.5");
  // 10 significant digits in CSV, 17 in JSON
  CHECK(fmt_csv(1.0 / 3.0) == "0.3333333333");
  CHECK(fmt_json(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("figure data is deterministic and carries the spot values") {
  const std::string a = figure_csv(1);
  const std::string b = figure_csv(1);
  CHECK(a == b);
  CHECK(a.rfind("r,V_q1,V_q3,V_q7\n", 0) == 0);

  // row 160 sits exactly at r = R0; V(R0) = -22.5 (q=1), -11.875 (q=3)
  std::istringstream in(a);
  std::string line;
  for (int i = 0; i <= 161; ++i) std::getline(in, line);
  double r, v1, v3, v7;
  char comma;
  std::istringstream row(line);
  row >> r >> comma >> v1 >> comma >> v3 >> comma >> v7;
  CHECK(r == doctest::Approx(1.285 * std::cbrt(56.0)).epsilon(1e-9));  // CSV carries 10 digits
  CHECK(v1 == doctest::Approx(-22.5).epsilon(1e-9));
  CHECK(v3 == doctest::Approx(-11.875).epsilon(1e-9));

  CHECK(figure_csv(2).rfind("r,V2_10,V2_50,V2_100\n", 0) == 0);
  CHECK(figure_csv(3).rfind("n,E_a0.65,E_a0.85,E_a1.05\n", 0) == 0);
  CHECK(figure_csv(4) == figure_csv(4));
  CHECK_THROWS_AS(figure_csv(5), Error);
}
