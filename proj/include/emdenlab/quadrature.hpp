#pragma once

#include <Eigen/Core>

#include "emdenlab/grid.hpp"

namespace emdenlab {

/// Cumulative values of  integral f(t) t^weight_power dt  along the grid.
struct CumulativeIntegrals {
  Eigen::ArrayXd from_left;    ///< integral from 0 to r_i (head extension included)
  Eigen::ArrayXd from_right;   ///< integral from r_i to r_max
  bool head_integrable = true; ///< false when the extension below r_min diverges
  double head_term = 0;        ///< contribution of (0, r_min]
};

/// Composite quadrature in s = log t (cubic Newton-Cotes per interval, 4th
/// order).  The piece below s_min is added analytically from the power-law
/// head asymptote f ~ f(r_min) (t/r_min)^head_exponent; a head power <= -1
/// after weighting is flagged non-integrable and contributes nothing.
CumulativeIntegrals cumulative_integrals(const Grid& g, const Eigen::ArrayXd& samples,
                                         double weight_power, double head_exponent);

/// Interpolated value of a nodal sample array at log-radius s (quintic).
double interp_at(const Grid& g, const Eigen::ArrayXd& samples, double s);

}  // namespace emdenlab
