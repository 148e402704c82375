#include "wsnu/config.hpp"

#include <cstdio>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include <json.hpp>

namespace wsnu {

using nlohmann::json;

PotentialParams RunConfig::potential() const {
  if (units != "atomic" && units != "explicit")
    throw Error("config", "units must be 'atomic' or 'explicit'");
  PotentialParams p;
  p.V1 = v1;
  p.V2 = v2;
  p.V1I = v1i;
  p.q = q;
  p.a = a;
  p.r0 = r0;
  p.A = mass_number;
  p.hbar2_over_2m = units == "atomic" ? 0.5 : hbar2_over_2m;
  p.variant = variant;
  p.alpha_I = alpha_imag;
  try {
    p.validate();
  } catch (const Error& e) {
    throw Error("config", e.what());
  }
  if (l < 0) throw Error("config", "l must be >= 0");
  if (nmax < 0 || nmax > 1000) throw Error("config", "nmax must be in [0, 1000]");
  if (l != 0 && variant != Variant::hermitian)
    throw Error("config", "l != 0 requires the hermitian variant");
  return p;
}

RadialGrid RunConfig::grid() const {
  const PotentialParams p = potential();
  RadialGrid g = RadialGrid::for_potential(p);
  if (grid_rmax > 0.0) {
    g.r_max = grid_rmax;
    const int n = std::max(
        2000, static_cast<int>(std::ceil(g.r_max / (p.a / 20.0))));
    g.h = g.r_max / n;
  }
  if (grid_h > 0.0) {
    const int n = std::max(100, static_cast<int>(std::ceil(g.r_max / grid_h)));
    g.h = g.r_max / n;
  }
  return g;
}

namespace {

Variant variant_from(const std::string& s) {
  if (s == "hermitian") return Variant::hermitian;
  if (s == "pt") return Variant::pt_symmetric;
  if (s == "nonpt") return Variant::non_pt;
  throw Error("config", "unknown variant '" + s + "'");
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error("config", std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error("config", "config must be a JSON object");

  static const std::set<std::string> known = {
      "variant", "units", "hbar2_over_2m", "v1", "v2", "v1i", "q", "a",
      "r0", "mass_number", "alpha_imag", "l", "nmax", "grid_rmax",
      "grid_h", "format", "out"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) throw Error("config", "unknown key '" + key + "'");

  RunConfig c;
  try {
    if (j.contains("variant")) c.variant = variant_from(j["variant"]);
    if (j.contains("units")) c.units = j["units"];
    if (j.contains("hbar2_over_2m")) c.hbar2_over_2m = j["hbar2_over_2m"];
    if (j.contains("v1")) c.v1 = j["v1"];
    if (j.contains("v2")) c.v2 = j["v2"];
    if (j.contains("v1i")) c.v1i = j["v1i"];
    if (j.contains("q")) c.q = j["q"];
    if (j.contains("a")) c.a = j["a"];
    if (j.contains("r0")) c.r0 = j["r0"];
    if (j.contains("mass_number")) c.mass_number = j["mass_number"];
    if (j.contains("alpha_imag")) c.alpha_imag = j["alpha_imag"];
    if (j.contains("l")) c.l = j["l"];
    if (j.contains("nmax")) c.nmax = j["nmax"];
    if (j.contains("grid_rmax")) c.grid_rmax = j["grid_rmax"];
    if (j.contains("grid_h")) c.grid_h = j["grid_h"];
    if (j.contains("format")) {
      const std::string f = j["format"];
      if (f == "csv")
        c.format = OutputFormat::csv;
      else if (f == "json")
        c.format = OutputFormat::json;
      else
        throw Error("config", "format must be 'csv' or 'json'");
    }
    if (j.contains("out")) c.out = j["out"];
  } catch (const json::exception& e) {
    throw Error("config", std::string("bad field type: ") + e.what());
  }
  return c;
}

std::string serialize_config(const RunConfig& c) {
  json j;
  j["variant"] = to_string(c.variant);
  j["units"] = c.units;
  j["hbar2_over_2m"] = c.hbar2_over_2m;
  j["v1"] = c.v1;
  j["v2"] = c.v2;
  j["v1i"] = c.v1i;
  j["q"] = c.q;
  j["a"] = c.a;
  j["r0"] = c.r0;
  j["mass_number"] = c.mass_number;
  j["alpha_imag"] = c.alpha_imag;
  j["l"] = c.l;
  j["nmax"] = c.nmax;
  j["grid_rmax"] = c.grid_rmax;
  j["grid_h"] = c.grid_h;
  j["format"] = c.format == OutputFormat::csv ? "csv" : "json";
  j["out"] = c.out;
  return j.dump(2);
}

bool operator==(const RunConfig& a, const RunConfig& b) {
  return a.variant == b.variant && a.units == b.units &&
         a.hbar2_over_2m == b.hbar2_over_2m && a.v1 == b.v1 && a.v2 == b.v2 &&
         a.v1i == b.v1i && a.q == b.q && a.a == b.a && a.r0 == b.r0 &&
         a.mass_number == b.mass_number && a.alpha_imag == b.alpha_imag &&
         a.l == b.l && a.nmax == b.nmax && a.grid_rmax == b.grid_rmax &&
         a.grid_h == b.grid_h && a.format == b.format && a.out == b.out;
}

std::string fmt_csv(double v) {
  if (v == 0.0) return "0";  // folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fmt_json(double v) {
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("io", "cannot open " + tmp.string());
    f << content;
    if (!f.good()) throw Error("io", "write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace wsnu
