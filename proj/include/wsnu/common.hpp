#ifndef WSNU_COMMON_HPP
#define WSNU_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace wsnu {

using cplx = std::complex<double>;

/// Structured error with a stable machine-readable code ("potential-pole",
/// "k-unsolvable", ...). The CLI maps codes to exit codes; library consumers
/// can dispatch on code() without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Raised by branch selection when no candidate has Re(tau') < 0.
/// Carries the slope of every rejected candidate for diagnostics.
class NoAdmissibleBranch : public Error {
 public:
  NoAdmissibleBranch(const std::string& msg, std::vector<cplx> slopes)
      : Error("no-admissible-branch", msg), slopes_(std::move(slopes)) {}

  const std::vector<cplx>& candidate_slopes() const { return slopes_; }

 private:
  std::vector<cplx> slopes_;
};

/// Principal square root with signed zeros folded to +0, so that values
/// that are real up to rounding artifacts stay on the upper branch
/// (sqrt(-1 - 0i) would otherwise return -i).
inline std::complex<double> principal_sqrt(std::complex<double> z) {
  if (z.imag() == 0.0) z = {z.real(), 0.0};
  return std::sqrt(z);
}

inline bool near_zero(double v, double scale, double tol = 1e-14) {
  return std::abs(v) <= tol * std::max(1.0, scale);
}

inline bool near_zero(cplx v, double scale, double tol = 1e-14) {
  return std::abs(v) <= tol * std::max(1.0, scale);
}

}  // namespace wsnu

#endif
