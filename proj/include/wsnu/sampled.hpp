#ifndef WSNU_SAMPLED_HPP
#define WSNU_SAMPLED_HPP

#include <Eigen/Core>

#include "wsnu/common.hpp"

namespace wsnu {

/// Ordered samples of a complex-valued function on a 1-D grid.
struct SampledFunction {
  Eigen::VectorXd x;
  Eigen::VectorXcd y;

  void append(double xi, cplx yi) {
    const auto n = x.size();
    x.conservativeResize(n + 1);
    y.conservativeResize(n + 1);
    x[n] = xi;
    y[n] = yi;
  }
};

}  // namespace wsnu

#endif
