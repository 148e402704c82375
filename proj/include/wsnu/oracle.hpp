#ifndef WSNU_ORACLE_HPP
#define WSNU_ORACLE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wsnu/spectrum.hpp"

namespace wsnu {

/// Uniform radial grid with Dirichlet boundaries at both ends.
struct RadialGrid {
  double r_min = 0.0;
  double r_max = 1.0;
  double h = 1e-2;

  int intervals() const;  // (r_max - r_min)/h, validated integer >= 100
  void validate() const;

  /// Default grid for a potential: [0, R0 + 40a], h <= a/20 and at least
  /// 2000 intervals.
  static RadialGrid for_potential(const PotentialParams& p);
};

struct NumericLevel {
  int index = 0;       // 0-based
  double energy = 0.0;
  int nodes = 0;       // interior sign changes
  double convergence_estimate = 0.0;  // Richardson h -> h/2
};

struct NumericSpectrum {
  std::vector<NumericLevel> levels;
  RadialGrid grid;
  std::string method;  // "fd2" or "numerov"
  std::vector<std::string> notes;
};

/// Potential entering the radial equation: the real potential plus the
/// true centrifugal term l(l+1) hbar^2 / (2 m r^2). This is deliberately
/// NOT the Woods-Saxon-shaped surrogate, so comparisons measure the
/// surrogate's quality.
double radial_potential(double r, const PotentialParams& p, int l);

/// Lowest k_levels eigenvalues of the O(h^2) central-difference
/// discretization, by bisection on Sturm sequence sign counts. Each level
/// carries a Richardson error estimate from one grid halving. Levels at or
/// above continuum_threshold (when given) are dropped with a
/// "continuum-reached" note.
NumericSpectrum fd_spectrum(const PotentialParams& p, int l,
                            const RadialGrid& grid, int k_levels,
                            std::optional<double> continuum_threshold = {});

/// One eigenvalue by Numerov integration from both ends with a
/// matching-defect bisection over [e_lo, e_hi]. The defect must change
/// sign across the bracket ("bracket-miss" otherwise). O(h^4) accurate.
double numerov_eigenvalue(const PotentialParams& p, int l,
                          const RadialGrid& grid, double e_lo, double e_hi);

/// Generic-potential entry points shared by the self-tests (e.g. the
/// particle in a box uses vfn = 0 on [0, L]).
NumericSpectrum fd_spectrum_fn(const std::function<double(double)>& vfn,
                               double hbar2_over_2m, const RadialGrid& grid,
                               int k_levels,
                               std::optional<double> continuum_threshold = {});
double numerov_eigenvalue_fn(const std::function<double(double)>& vfn,
                             double hbar2_over_2m, const RadialGrid& grid,
                             double e_lo, double e_hi);

/// Observed convergence order of level `index` from three grids (h, h/2,
/// h/4): log2 |E_h - E_{h/2}| / |E_{h/2} - E_{h/4}|. For the Numerov
/// method the same eigenvalue is re-bracketed on each grid.
double measure_convergence_order(const std::function<double(double)>& vfn,
                                 double hbar2_over_2m, const RadialGrid& grid,
                                 int index, const std::string& method,
                                 double e_lo = 0.0, double e_hi = 0.0);

struct ComparisonRow {
  int n = 0;
  double e_nu = 0.0;
  std::optional<double> e_numeric;
  double abs_gap = 0.0;
  double rel_gap = 0.0;
  bool admissible = true;
  std::string notes;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
  std::string to_csv() const;  // header: n,E_nu,E_numeric,abs_gap,rel_gap,admissible,notes
};

/// Pairs each closed-form level with the nearest remaining numeric level
/// (in ascending n order); rows left without a partner are flagged
/// "no-numeric-partner". No tolerance is asserted on the gap.
/// Throws "empty-comparison" when either side is empty.
ComparisonTable compare_report(const std::vector<EnergyLevel>& nu_levels,
                               const NumericSpectrum& numeric);

}  // namespace wsnu

#endif
