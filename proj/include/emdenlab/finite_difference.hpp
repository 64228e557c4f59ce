#pragma once

#include <Eigen/Core>

namespace emdenlab {

/// Finite-difference weights (Fornberg) for the deriv_order-th derivative at
/// offset x0, given node offsets in units of the step.  Divide by h^order.
Eigen::ArrayXd fd_weights(const Eigen::ArrayXd& offsets, int deriv_order, double x0 = 0.0);

/// 4th-order accurate derivative of uniformly sampled data: central 5-point
/// stencils inside, one-sided 6-point stencils at the ends.  order is 1 or 2.
Eigen::ArrayXd differentiate(const Eigen::ArrayXd& f, double h, int order);

}  // namespace emdenlab
