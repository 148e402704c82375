#ifndef WSNU_VERIFY_HPP
#define WSNU_VERIFY_HPP

#include <string>
#include <vector>

namespace wsnu {

struct VerifyResult {
  std::string name;
  bool pass = false;
  bool exploratory = false;  // reported but never fails the run
  std::string detail;
};

struct VerifyOptions {
  /// Test fixture: multiplies eps by 1.01 inside the residual invariant,
  /// which must then fail (detector sensitivity).
  bool inject_eps_perturbation = false;
};

/// Runs the invariant suite for a scope in {"all", "nu", "spectrum",
/// "wavefn", "oracle"}. Deterministic.
std::vector<VerifyResult> run_verify(const std::string& scope,
                                     const VerifyOptions& opt = {});

/// True iff every non-exploratory result passed.
bool all_passed(const std::vector<VerifyResult>& results);

}  // namespace wsnu

#endif
