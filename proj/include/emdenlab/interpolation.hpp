#pragma once

#include <Eigen/Core>

namespace emdenlab {

/// Degree-5 Lagrange interpolation of samples f_i given at x0 + i*h,
/// stencil shifted inward near the ends.  x must lie within the sampled range
/// (a small roundoff margin is tolerated).
double interp_uniform(const Eigen::ArrayXd& f, double x0, double h, double x);

}  // namespace emdenlab
