#ifndef WSNU_FIGURES_HPP
#define WSNU_FIGURES_HPP

#include <string>

namespace wsnu {

/// Survey-figure parameter set (empirical geometry r0 = 1.285 fm,
/// a = 0.65 fm, A = 56 with V1 = 50 MeV, V2 = 10 MeV).
struct FigureParams {
  double v1 = 50.0;
  double v2 = 10.0;
  double r0 = 1.285;
  double a = 0.65;
  double mass_number = 56.0;
  double q = 1.0;
};

/// CSV data behind the four survey figures:
///  1: V(r) for q in {1, 3, 7}            header r,V_q1,V_q3,V_q7
///  2: V(r) for V2 in {10, 50, 100}       header r,V2_10,V2_50,V2_100
///  3: E_n vs n, V2 = 0, a in {0.65, 0.85, 1.05} (atomic units)
///  4: E_n vs n, V2 as given, same a values
/// The radial grid step is R0/160 so r = R0 lands exactly on row 160.
/// Output is deterministic byte for byte.
std::string figure_csv(int fig, const FigureParams& fp = {});

}  // namespace wsnu

#endif
