#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "wsnu/config.hpp"
#include "wsnu/figures.hpp"
#include "wsnu/oracle.hpp"
#include "wsnu/sampled.hpp"
#include "wsnu/verify.hpp"
#include "wsnu/wavefn.hpp"

namespace {

using namespace wsnu;

// Flags shared by the data-producing subcommands. Each option remembers
// whether it was set so file-config values survive unset flags.
struct Flags {
  RunConfig values;
  std::string config_path;
  std::string variant = "hermitian";
  std::string format = "csv";
  CLI::App* cmd = nullptr;

  void attach(CLI::App* app) {
    cmd = app;
    app->add_option("--config", config_path, "JSON config file");
    app->add_option("--variant", variant)
        ->check(CLI::IsMember({"hermitian", "pt", "nonpt"}));
    app->add_option("--units", values.units)
        ->check(CLI::IsMember({"atomic", "explicit"}));
    app->add_option("--hbar2-over-2m", values.hbar2_over_2m);
    app->add_option("--v1", values.v1);
    app->add_option("--v2", values.v2);
    app->add_option("--v1i", values.v1i);
    app->add_option("--q", values.q);
    app->add_option("--a", values.a);
    app->add_option("--r0", values.r0);
    app->add_option("--mass-number", values.mass_number);
    app->add_option("--alpha-imag", values.alpha_imag);
    app->add_option("--l", values.l);
    app->add_option("--nmax", values.nmax);
    app->add_option("--grid-rmax", values.grid_rmax);
    app->add_option("--grid-h", values.grid_h);
    app->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    app->add_option("--out", values.out);
  }

  RunConfig resolve() const {
    RunConfig c;
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw Error("config", "cannot read " + config_path);
      std::ostringstream ss;
      ss << f.rdbuf();
      c = parse_config(ss.str());
    }
    auto set = [&](const char* name) { return cmd->count(name) > 0; };
    if (set("--variant"))
      c.variant = variant == "hermitian" ? Variant::hermitian
                  : variant == "pt"      ? Variant::pt_symmetric
                                         : Variant::non_pt;
    if (set("--units")) c.units = values.units;
    if (set("--hbar2-over-2m")) c.hbar2_over_2m = values.hbar2_over_2m;
    if (set("--v1")) c.v1 = values.v1;
    if (set("--v2")) c.v2 = values.v2;
    if (set("--v1i")) c.v1i = values.v1i;
    if (set("--q")) c.q = values.q;
    if (set("--a")) c.a = values.a;
    if (set("--r0")) c.r0 = values.r0;
    if (set("--mass-number")) c.mass_number = values.mass_number;
    if (set("--alpha-imag")) c.alpha_imag = values.alpha_imag;
    if (set("--l")) c.l = values.l;
    if (set("--nmax")) c.nmax = values.nmax;
    if (set("--grid-rmax")) c.grid_rmax = values.grid_rmax;
    if (set("--grid-h")) c.grid_h = values.grid_h;
    if (set("--format"))
      c.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
    if (set("--out")) c.out = values.out;
    return c;
  }
};

std::string reasons_joined(const EnergyLevel& lv) {
  std::string s;
  for (const auto& r : lv.admissibility_reasons)
    s += (s.empty() ? "" : ";") + r;
  return s;
}

std::string levels_csv(const std::vector<EnergyLevel>& levels) {
  std::string out =
      "n,l,re_energy,im_energy,re_bracket,im_bracket,admissible,reasons\n";
  for (const auto& lv : levels) {
    out += std::to_string(lv.n) + "," + std::to_string(lv.l) + "," +
           fmt_csv(lv.energy.real()) + "," + fmt_csv(lv.energy.imag()) + "," +
           fmt_csv(lv.bracket.real()) + "," + fmt_csv(lv.bracket.imag()) +
           "," + (lv.admissible ? "true" : "false") + "," +
           reasons_joined(lv) + "\n";
  }
  return out;
}

std::string levels_json(const std::vector<EnergyLevel>& levels) {
  std::string out = "{\n  \"levels\": [\n";
  for (size_t i = 0; i < levels.size(); ++i) {
    const auto& lv = levels[i];
    out += "    {\"n\": " + std::to_string(lv.n) +
           ", \"l\": " + std::to_string(lv.l) +
           ", \"re_energy\": " + fmt_json(lv.energy.real()) +
           ", \"im_energy\": " + fmt_json(lv.energy.imag()) +
           ", \"re_bracket\": " + fmt_json(lv.bracket.real()) +
           ", \"im_bracket\": " + fmt_json(lv.bracket.imag()) +
           ", \"re_nu\": " + fmt_json(lv.nu.real()) +
           ", \"im_nu\": " + fmt_json(lv.nu.imag()) +
           ", \"admissible\": " + (lv.admissible ? "true" : "false") +
           ", \"reasons\": \"" + reasons_joined(lv) + "\"}";
    out += i + 1 < levels.size() ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

int cmd_spectrum(const RunConfig& c) {
  const PotentialParams p = c.potential();
  const auto levels = enumerate_levels(p, c.l, c.nmax);
  write_output(c.out, c.format == OutputFormat::csv ? levels_csv(levels)
                                                    : levels_json(levels));
  return 0;
}

std::string sampled_csv(const char* coord, const char* val,
                        const SampledFunction& f) {
  std::string out =
      std::string(coord) + ",re_" + val + ",im_" + val + "\n";
  for (Eigen::Index i = 0; i < f.x.size(); ++i)
    out += fmt_csv(f.x[i]) + "," + fmt_csv(f.y[i].real()) + "," +
           fmt_csv(f.y[i].imag()) + "\n";
  return out;
}

std::string sampled_json(const char* coord, const char* val,
                         const SampledFunction& f) {
  std::string out = "{\n  \"samples\": [\n";
  for (Eigen::Index i = 0; i < f.x.size(); ++i) {
    out += std::string("    {\"") + coord + "\": " + fmt_json(f.x[i]) +
           ", \"re_" + val + "\": " + fmt_json(f.y[i].real()) + ", \"im_" +
           val + "\": " + fmt_json(f.y[i].imag()) + "}";
    out += i + 1 < f.x.size() ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

void write_sampled(const RunConfig& c, const char* coord, const char* val,
                   const SampledFunction& f) {
  write_output(c.out, c.format == OutputFormat::csv
                          ? sampled_csv(coord, val, f)
                          : sampled_json(coord, val, f));
}

int cmd_potential(const RunConfig& c) {
  const PotentialParams p = c.potential();
  const RadialGrid g = c.grid();
  SampledFunction f;
  if (p.variant == Variant::hermitian) {
    const int n = g.intervals();
    for (int i = 0; i <= n; ++i) {
      const double r = g.r_min + i * g.h;
      f.append(r, c.l != 0 ? effective_potential_l(r, p, c.l)
                           : potential_real(r, p));
    }
    write_sampled(c, "r", "V", f);
    return 0;
  }
  // complex variants live on a symmetric coordinate window; pole points
  // are skipped deterministically
  const double xmax = c.grid_rmax > 0.0
                          ? c.grid_rmax
                          : 2.0 * std::numbers::pi / p.alpha_I;
  const int npts = 800;
  for (int i = 0; i <= npts; ++i) {
    const double x = -xmax + 2.0 * xmax * i / npts;
    try {
      f.append(x, p.variant == Variant::pt_symmetric ? potential_pt(x, p)
                                                     : potential_nonpt(x, p));
    } catch (const Error& e) {
      if (e.code() != "potential-pole") throw;
    }
  }
  write_sampled(c, "x", "V", f);
  return 0;
}

int cmd_wavefn(const RunConfig& c, int level_n, const std::string& mode_name,
               int samples) {
  if (samples < 1) throw Error("config", "--samples must be >= 1");
  if (level_n < 0) throw Error("config", "--n must be >= 0");
  const PotentialParams p = c.potential();
  const WavefnMode mode = mode_name == "published"
                              ? WavefnMode::published
                              : WavefnMode::residual_consistent;
  EnergyLevel lv;
  if (p.variant == Variant::hermitian)
    lv = c.l == 0 ? energy_hermitian_s(level_n, p)
                  : energy_hermitian_l(level_n, c.l, p);
  else if (p.variant == Variant::pt_symmetric)
    lv = energy_pt(level_n, p);
  else
    throw Error("config", "wavefn supports hermitian and pt variants");

  const Eigenfunction f = p.variant == Variant::hermitian
                              ? assemble_hermitian(lv, p, mode)
                              : assemble_pt(lv, p, mode);

  const double xmax = p.variant == Variant::hermitian
                          ? (c.grid_rmax > 0.0 ? c.grid_rmax : 10.0 * p.a)
                          : (2.0 * std::numbers::pi - 0.2) / p.alpha_I;
  const double xmin = p.variant == Variant::hermitian ? -xmax : 0.2 / p.alpha_I;
  SampledFunction out;
  for (int i = 0; i <= samples; ++i) {
    const double x = xmin + (xmax - xmin) * i / samples;
    out.append(x, f.value_x(x));
  }
  write_sampled(c, "x", "R", out);
  return 0;
}

int cmd_figures(int fig, const RunConfig& flags_over, const CLI::App* cmd,
                const std::string& out_path) {
  // survey defaults; flags that were explicitly set override them
  FigureParams fp;
  auto set = [&](const char* name) { return cmd->count(name) > 0; };
  if (set("--v1")) fp.v1 = flags_over.v1;
  if (set("--v2")) fp.v2 = flags_over.v2;
  if (set("--r0")) fp.r0 = flags_over.r0;
  if (set("--a")) fp.a = flags_over.a;
  if (set("--mass-number")) fp.mass_number = flags_over.mass_number;
  if (set("--q")) fp.q = flags_over.q;

  write_output(out_path.empty() ? "fig" + std::to_string(fig) + ".csv"
                                : out_path,
               figure_csv(fig, fp));
  return 0;
}

int cmd_compare(const RunConfig& c) {
  const PotentialParams p = c.potential();
  if (p.variant != Variant::hermitian)
    throw Error("config", "compare requires the hermitian variant");
  const auto levels = enumerate_levels(p, c.l, c.nmax);
  const RadialGrid g = c.grid();
  const auto numeric = fd_spectrum(p, c.l, g, c.nmax + 1, 0.0);
  const auto table = compare_report(levels, numeric);
  write_output(c.out, table.to_csv());
  return 0;
}

int cmd_verify(const std::string& scope, bool inject) {
  VerifyOptions opt;
  opt.inject_eps_perturbation = inject;
  const auto results = run_verify(scope, opt);
  for (const auto& r : results) {
    const char* tag = r.exploratory ? "INFO" : (r.pass ? "PASS" : "FAIL");
    std::cout << tag << " " << r.name << ": " << r.detail << "\n";
  }
  const bool ok = all_passed(results);
  std::cout << (ok ? "verify: all invariants passed\n"
                   : "verify: FAILURES present\n");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound states of generalized Woods-Saxon potentials: "
               "closed-form spectra, eigenfunctions, and numeric checks"};
  app.require_subcommand(1);

  Flags sp_flags, pot_flags, wf_flags, fig_flags, cmp_flags;

  auto* sp = app.add_subcommand("spectrum", "closed-form energy levels");
  sp_flags.attach(sp);

  auto* pot = app.add_subcommand("potential", "sampled potential curve");
  pot_flags.attach(pot);

  auto* wf = app.add_subcommand("wavefn", "sampled eigenfunction");
  wf_flags.attach(wf);
  int wf_n = 0, wf_samples = 400;
  std::string wf_mode = "residual";
  wf->add_option("--n", wf_n, "level index");
  wf->add_option("--mode", wf_mode)->check(CLI::IsMember({"residual", "published"}));
  wf->add_option("--samples", wf_samples);

  auto* fig = app.add_subcommand("figures", "survey figure data (CSV)");
  fig_flags.attach(fig);
  int fig_id = 1;
  fig->add_option("--fig", fig_id, "figure id 1..4");

  auto* cmp = app.add_subcommand("compare",
                                 "closed-form vs numeric spectrum report");
  cmp_flags.attach(cmp);

  auto* ver = app.add_subcommand("verify", "run the invariant suites");
  std::string scope = "all";
  bool inject = false;
  ver->add_option("scope", scope)
      ->check(CLI::IsMember({"all", "nu", "spectrum", "wavefn", "oracle"}));
  ver->add_flag("--inject-eps-perturbation", inject,
                "test fixture: perturb eps inside the residual invariant");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sp->parsed()) return cmd_spectrum(sp_flags.resolve());
    if (pot->parsed()) return cmd_potential(pot_flags.resolve());
    if (wf->parsed())
      return cmd_wavefn(wf_flags.resolve(), wf_n, wf_mode, wf_samples);
    if (fig->parsed()) {
      const RunConfig c = fig_flags.resolve();
      return cmd_figures(fig_id, fig_flags.values, fig, c.out);
    }
    if (cmp->parsed()) return cmd_compare(cmp_flags.resolve());
    if (ver->parsed()) return cmd_verify(scope, inject);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == "config" ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
