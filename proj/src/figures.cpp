#include "wsnu/figures.hpp"

#include <cmath>

#include "wsnu/config.hpp"
#include "wsnu/spectrum.hpp"

namespace wsnu {

std::string figure_csv(int fig, const FigureParams& fp) {
  PotentialParams p;
  p.V1 = fp.v1;
  p.V2 = fp.v2;
  p.r0 = fp.r0;
  p.a = fp.a;
  p.A = fp.mass_number;
  p.q = fp.q;
  p.hbar2_over_2m = 0.5;
  p.validate();

  std::string out;
  if (fig == 1 || fig == 2) {
    const double h = p.R0() / 160.0;
    const int rows = 160 + static_cast<int>(std::ceil(40.0 * p.a / h));
    if (fig == 1) {
      out = "r,V_q1,V_q3,V_q7\n";
      for (int i = 0; i <= rows; ++i) {
        const double r = i * h;
        out += fmt_csv(r);
        for (double q : {1.0, 3.0, 7.0}) {
          p.q = q;
          out += "," + fmt_csv(potential_real(r, p));
        }
        out += "\n";
      }
    } else {
      out = "r,V2_10,V2_50,V2_100\n";
      for (int i = 0; i <= rows; ++i) {
        const double r = i * h;
        out += fmt_csv(r);
        for (double v2 : {10.0, 50.0, 100.0}) {
          p.V2 = v2;
          out += "," + fmt_csv(potential_real(r, p));
        }
        out += "\n";
      }
    }
    return out;
  }
  if (fig == 3 || fig == 4) {
    out = "n,E_a0.65,E_a0.85,E_a1.05\n";
    p.q = 1.0;
    p.V2 = fig == 3 ? 0.0 : fp.v2;
    for (int n = 0; n <= 10; ++n) {
      out += std::to_string(n);
      for (double a : {0.65, 0.85, 1.05}) {
        p.a = a;
        out += "," + fmt_csv(energy_hermitian_s(n, p).energy.real());
      }
      out += "\n";
    }
    return out;
  }
  throw Error("config", "figure id must be 1..4");
}

}  // namespace wsnu
