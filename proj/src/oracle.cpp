#include "wsnu/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

#include <Eigen/Core>

namespace wsnu {

int RadialGrid::intervals() const {
  return static_cast<int>(std::llround((r_max - r_min) / h));
}

void RadialGrid::validate() const {
  if (!(h > 0.0) || !(r_max > r_min))
    throw Error("invalid-grid", "need h > 0 and r_max > r_min");
  const double ratio = (r_max - r_min) / h;
  const int n = static_cast<int>(std::llround(ratio));
  if (std::abs(ratio - n) > 1e-9 * std::max(1.0, ratio))
    throw Error("invalid-grid", "(r_max - r_min)/h must be an integer");
  if (n < 100) throw Error("invalid-grid", "need at least 100 intervals");
}

RadialGrid RadialGrid::for_potential(const PotentialParams& p) {
  RadialGrid g;
  g.r_min = 0.0;
  g.r_max = p.R0() + 40.0 * p.a;
  const int n = std::max(
      2000, static_cast<int>(std::ceil((g.r_max - g.r_min) / (p.a / 20.0))));
  g.h = (g.r_max - g.r_min) / n;
  return g;
}

double radial_potential(double r, const PotentialParams& p, int l) {
  double v = potential_real(r, p);
  if (l > 0) {
    const double centrifugal =
        static_cast<double>(l) * (l + 1.0) * p.hbar2_over_2m / (r * r);
    v += centrifugal;
  }
  return v;
}

namespace {

// Eigenvalues of the symmetric tridiagonal matrix (diag d, uniform
// off-diagonal b) below x, counted by the Sturm sequence sign count.
int sturm_count(const Eigen::VectorXd& diag, double off, double x) {
  int count = 0;
  double det = 1.0;
  const double b2 = off * off;
  const double tiny = 1e-300;
  for (int i = 0; i < diag.size(); ++i) {
    det = (diag[i] - x) - (i > 0 ? b2 / det : 0.0);
    if (det == 0.0) det = tiny;
    if (det < 0.0) ++count;
  }
  return count;
}

// k lowest eigenvalues by bisection on the Sturm count.
std::vector<double> tridiag_lowest(const Eigen::VectorXd& diag, double off,
                                   int k) {
  const double amax = diag.maxCoeff(), amin = diag.minCoeff();
  double lo0 = amin - 2.0 * std::abs(off), hi0 = amax + 2.0 * std::abs(off);
  std::vector<double> out;
  for (int j = 1; j <= k; ++j) {
    double lo = lo0, hi = hi0;
    for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(hi));
         ++it) {
      const double mid = 0.5 * (lo + hi);
      if (sturm_count(diag, off, mid) >= j)
        hi = mid;
      else
        lo = mid;
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

// Interior sign changes of the eigenvector, by inverse iteration with a
// slightly shifted Thomas solve.
int count_nodes(const Eigen::VectorXd& diag, double off, double lambda) {
  const int n = static_cast<int>(diag.size());
  const double scale = diag.cwiseAbs().maxCoeff() + 2.0 * std::abs(off);
  const double shift = lambda + 1e-12 * scale;

  Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
  Eigen::VectorXd c(n), d(n);
  for (int iter = 0; iter < 3; ++iter) {
    // Thomas forward sweep for (T - shift I) w = v
    c[0] = off / (diag[0] - shift);
    d[0] = v[0] / (diag[0] - shift);
    for (int i = 1; i < n; ++i) {
      double m = (diag[i] - shift) - off * c[i - 1];
      if (m == 0.0) m = 1e-300;
      c[i] = off / m;
      d[i] = (v[i] - off * d[i - 1]) / m;
    }
    v[n - 1] = d[n - 1];
    for (int i = n - 2; i >= 0; --i) v[i] = d[i] - c[i] * v[i + 1];
    v /= v.norm();
  }

  const double floor = 1e-9 * v.cwiseAbs().maxCoeff();
  int nodes = 0;
  double prev = 0.0;
  for (int i = 0; i < n; ++i) {
    if (std::abs(v[i]) < floor) continue;
    if (prev != 0.0 && v[i] * prev < 0.0) ++nodes;
    prev = v[i];
  }
  return nodes;
}

Eigen::VectorXd build_diagonal(const std::function<double(double)>& vfn,
                               double h22m, const RadialGrid& g) {
  const int n = g.intervals();
  Eigen::VectorXd diag(n - 1);
  for (int i = 1; i < n; ++i)
    diag[i - 1] = 2.0 * h22m / (g.h * g.h) + vfn(g.r_min + i * g.h);
  return diag;
}

}  // namespace

NumericSpectrum fd_spectrum_fn(const std::function<double(double)>& vfn,
                               double h22m, const RadialGrid& grid,
                               int k_levels,
                               std::optional<double> continuum_threshold) {
  grid.validate();
  if (k_levels < 1) throw Error("invalid-params", "k_levels must be >= 1");
  if (k_levels >= grid.intervals())
    throw Error("invalid-params", "k_levels exceeds the grid resolution");

  const Eigen::VectorXd diag = build_diagonal(vfn, h22m, grid);
  const double off = -h22m / (grid.h * grid.h);
  const auto coarse = tridiag_lowest(diag, off, k_levels);

  RadialGrid fine = grid;
  fine.h = grid.h / 2.0;
  const Eigen::VectorXd diag2 = build_diagonal(vfn, h22m, fine);
  const double off2 = -h22m / (fine.h * fine.h);
  const auto refined = tridiag_lowest(diag2, off2, k_levels);

  NumericSpectrum out;
  out.grid = grid;
  out.method = "fd2";
  for (int i = 0; i < k_levels; ++i) {
    if (continuum_threshold && coarse[i] >= *continuum_threshold) {
      out.notes.push_back("continuum-reached");
      break;
    }
    NumericLevel lv;
    lv.index = i;
    lv.energy = coarse[i];
    lv.nodes = count_nodes(diag, off, coarse[i]);
    lv.convergence_estimate = std::abs(coarse[i] - refined[i]) / 3.0;
    out.levels.push_back(lv);
  }
  return out;
}

NumericSpectrum fd_spectrum(const PotentialParams& p, int l,
                            const RadialGrid& grid, int k_levels,
                            std::optional<double> continuum_threshold) {
  if (p.variant != Variant::hermitian)
    throw Error("variant-mismatch", "numeric solver handles hermitian only");
  if (grid.h > p.a / 20.0 + 1e-12)
    throw Error("invalid-grid", "grid must resolve the surface: h <= a/20");
  return fd_spectrum_fn([&](double r) { return radial_potential(r, p, l); },
                        p.hbar2_over_2m, grid, k_levels, continuum_threshold);
}

namespace {

// Matching defect for two-sided Numerov shooting: the cross product of
// the left and right solutions on the overlap pair (m, m+1). Both obey
// the same three-term recurrence, so the defect vanishes exactly at the
// eigenvalues of the discrete scheme (O(h^4) accuracy), and no division
// by a possibly-nodal u(m) is involved.
double matching_defect(const std::function<double(double)>& vfn, double h22m,
                       const RadialGrid& g, double e) {
  const int n = g.intervals();
  const double h = g.h, h2 = h * h;
  auto f = [&](int i) {
    return (vfn(g.r_min + i * g.h) - e) / h22m;
  };

  // match inside the classically allowed region: the outermost turning
  // point, or mid-grid when the whole range is allowed
  int m = n / 2;
  for (int i = n - 1; i >= 1; --i) {
    if (vfn(g.r_min + i * g.h) - e <= 0.0) {
      m = i;
      break;
    }
  }
  m = std::clamp(m, 2, n - 2);

  // For u'' = f u the Numerov step reads
  //   (1 - h^2 f_{i+1}/12) u_{i+1} =
  //       2 (1 + 5 h^2 f_i/12) u_i - (1 - h^2 f_{i-1}/12) u_{i-1}.

  // left sweep up to m+1: u_0 = 0
  double um1 = 0.0, u = 1e-12;
  for (int i = 1; i <= m; ++i) {
    const double up = (2.0 * u * (1.0 + 5.0 * h2 * f(i) / 12.0) -
                       um1 * (1.0 - h2 * f(i - 1) / 12.0)) /
                      (1.0 - h2 * f(i + 1) / 12.0);
    um1 = u;
    u = up;
    if (std::abs(u) > 1e200) {
      um1 /= 1e200;
      u /= 1e200;
    }
  }
  const double ul_m = um1, ul_m1 = u;

  // right sweep down to m: u_n = 0
  double up1 = 0.0, v = 1e-12;
  for (int i = n - 1; i > m; --i) {
    const double dn = (2.0 * v * (1.0 + 5.0 * h2 * f(i) / 12.0) -
                       up1 * (1.0 - h2 * f(i + 1) / 12.0)) /
                      (1.0 - h2 * f(i - 1) / 12.0);
    up1 = v;
    v = dn;
    if (std::abs(v) > 1e200) {
      up1 /= 1e200;
      v /= 1e200;
    }
  }
  const double ur_m = v, ur_m1 = up1;

  const double scale = (std::abs(ul_m) + std::abs(ul_m1)) *
                       (std::abs(ur_m) + std::abs(ur_m1));
  if (scale == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return (ul_m * ur_m1 - ul_m1 * ur_m) / scale;
}

}  // namespace

double numerov_eigenvalue_fn(const std::function<double(double)>& vfn,
                             double h22m, const RadialGrid& grid, double e_lo,
                             double e_hi) {
  grid.validate();
  double d_lo = matching_defect(vfn, h22m, grid, e_lo);
  double d_hi = matching_defect(vfn, h22m, grid, e_hi);
  if (!std::isfinite(d_lo) || !std::isfinite(d_hi) || d_lo * d_hi > 0.0)
    throw Error("bracket-miss",
                "matching defect does not change sign across the bracket");
  double lo = e_lo, hi = e_hi;
  for (int it = 0;
       it < 200 && hi - lo > 1e-15 * std::max({1.0, std::abs(lo), std::abs(hi)});
       ++it) {
    const double mid = 0.5 * (lo + hi);
    const double d_mid = matching_defect(vfn, h22m, grid, mid);
    if (!std::isfinite(d_mid)) break;
    if (d_lo * d_mid <= 0.0) {
      hi = mid;
      d_hi = d_mid;
    } else {
      lo = mid;
      d_lo = d_mid;
    }
  }
  return 0.5 * (lo + hi);
}

double numerov_eigenvalue(const PotentialParams& p, int l,
                          const RadialGrid& grid, double e_lo, double e_hi) {
  if (p.variant != Variant::hermitian)
    throw Error("variant-mismatch", "numeric solver handles hermitian only");
  return numerov_eigenvalue_fn(
      [&](double r) { return radial_potential(r, p, l); }, p.hbar2_over_2m,
      grid, e_lo, e_hi);
}

double measure_convergence_order(const std::function<double(double)>& vfn,
                                 double hbar2_over_2m, const RadialGrid& grid,
                                 int index, const std::string& method,
                                 double e_lo, double e_hi) {
  std::array<double, 3> e{};
  RadialGrid g = grid;
  for (int step = 0; step < 3; ++step) {
    if (method == "fd2") {
      const auto spec = fd_spectrum_fn(vfn, hbar2_over_2m, g, index + 1);
      e[step] = spec.levels.at(index).energy;
    } else {
      e[step] = numerov_eigenvalue_fn(vfn, hbar2_over_2m, g, e_lo, e_hi);
    }
    g.h /= 2.0;
  }
  const double d1 = std::abs(e[0] - e[1]);
  const double d2 = std::abs(e[1] - e[2]);
  if (d2 == 0.0) return std::numeric_limits<double>::infinity();
  return std::log2(d1 / d2);
}

std::string ComparisonTable::to_csv() const {
  std::string out = "n,E_nu,E_numeric,abs_gap,rel_gap,admissible,notes\n";
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return std::string(buf);
  };
  for (const auto& row : rows) {
    out += std::to_string(row.n) + "," + num(row.e_nu) + ",";
    if (row.e_numeric) {
      out += num(*row.e_numeric) + "," + num(row.abs_gap) + "," +
             num(row.rel_gap);
    } else {
      out += ",,";
    }
    out += std::string(",") + (row.admissible ? "true" : "false") + "," +
           row.notes + "\n";
  }
  return out;
}

ComparisonTable compare_report(const std::vector<EnergyLevel>& nu_levels,
                               const NumericSpectrum& numeric) {
  if (nu_levels.empty() || numeric.levels.empty())
    throw Error("empty-comparison", "both level lists must be non-empty");

  std::vector<double> pool;
  for (const auto& lv : numeric.levels) pool.push_back(lv.energy);

  ComparisonTable table;
  for (const auto& lv : nu_levels) {
    ComparisonRow row;
    row.n = lv.n;
    row.e_nu = lv.energy.real();
    row.admissible = lv.admissible;
    std::string notes;
    for (const auto& r : lv.admissibility_reasons)
      notes += (notes.empty() ? "" : ";") + r;
    if (pool.empty()) {
      row.notes = notes.empty() ? "no-numeric-partner"
                                : notes + ";no-numeric-partner";
    } else {
      auto it = std::min_element(pool.begin(), pool.end(),
                                 [&](double a, double b) {
                                   return std::abs(a - row.e_nu) <
                                          std::abs(b - row.e_nu);
                                 });
      row.e_numeric = *it;
      pool.erase(it);
      row.abs_gap = std::abs(row.e_nu - *row.e_numeric);
      row.rel_gap = row.abs_gap /
                    std::max({std::abs(row.e_nu), std::abs(*row.e_numeric),
                              1e-300});
      row.notes = notes;
    }
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace wsnu
