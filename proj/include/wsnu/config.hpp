#ifndef WSNU_CONFIG_HPP
#define WSNU_CONFIG_HPP

#include <optional>
#include <string>

#include "wsnu/model.hpp"
#include "wsnu/oracle.hpp"

namespace wsnu {

enum class OutputFormat { csv, json };

/// One run's worth of settings. Serializes to a flat JSON document; every
/// CLI flag has a config-file twin and flags override the file. Unknown
/// keys are rejected at parse time.
struct RunConfig {
  Variant variant = Variant::hermitian;
  std::string units = "atomic";  // "atomic" or "explicit"
  double hbar2_over_2m = 0.5;    // used in explicit mode
  double v1 = 1.0;
  double v2 = 0.0;
  double v1i = 0.0;
  double q = 1.0;
  double a = 1.0;
  double r0 = 1.0;
  double mass_number = 1.0;
  double alpha_imag = 1.0;
  int l = 0;
  int nmax = 10;
  double grid_rmax = 0.0;  // 0: derive from the potential
  double grid_h = 0.0;     // 0: derive from the potential
  OutputFormat format = OutputFormat::csv;
  std::string out;  // empty: stdout

  /// Validates and converts to potential parameters (throws Error with
  /// code "config" on bad values).
  PotentialParams potential() const;

  /// Grid for the numeric solver, derived when unset.
  RadialGrid grid() const;
};

/// Parse from a JSON document; unknown keys raise Error("config", ...).
RunConfig parse_config(const std::string& json_text);

/// Serialize; parse_config(serialize_config(c)) == c field-wise.
std::string serialize_config(const RunConfig& c);

bool operator==(const RunConfig& a, const RunConfig& b);

/// %.10g for CSV cells, %.17g for JSON payloads.
std::string fmt_csv(double v);
std::string fmt_json(double v);

/// Write content to path via a temp file and rename, or to stdout when
/// path is empty.
void write_output(const std::string& path, const std::string& content);

}  // namespace wsnu

#endif
