#pragma once

#include <Eigen/Core>
#include <memory>

namespace emdenlab {

/// Logarithmic radial grid, uniform in s = log r.
struct Grid {
  double s_min = 0;
  double s_max = 0;
  Eigen::Index count = 0;
  double step = 0;       ///< (s_max - s_min) / (count - 1)
  Eigen::ArrayXd s;      ///< nodes in log radius
  Eigen::ArrayXd r;      ///< exp(s)
};

using GridPtr = std::shared_ptr<const Grid>;

/// Builds a uniform log-radius grid.  Requires s_min < s_max and count >= 64.
GridPtr build_grid(double s_min, double s_max, Eigen::Index count);

/// Same spacing, same endpoints, twice the resolution (count -> 2*count - 1).
GridPtr refine_grid(const Grid& g);

/// True when two grids have identical extent, count and spacing (1e-14 relative).
bool compatible(const Grid& a, const Grid& b);

/// Radial samples together with the derivative d/dr and power-law asymptote
/// exponents used to extend the profile beyond the grid ends.
struct RadialProfile {
  GridPtr grid;
  Eigen::ArrayXd values;
  Eigen::ArrayXd derivative;
  double head_exponent = 0;   ///< f ~ c r^{head_exponent} as r -> 0
  double tail_exponent = 0;   ///< f ~ c r^{tail_exponent} as r -> infinity
};

/// Validates sizes and finiteness; throws std::invalid_argument on violation.
RadialProfile make_profile(GridPtr g, Eigen::ArrayXd values, Eigen::ArrayXd derivative,
                           double head_exponent = 0, double tail_exponent = 0);

/// Pointwise product; asymptote exponents add.
RadialProfile multiply(const RadialProfile& a, const RadialProfile& b);

/// a + c * b on a common grid; asymptote exponents take the slower-decaying one.
RadialProfile axpy(const RadialProfile& a, double c, const RadialProfile& b);

/// Profile value at arbitrary radius: quintic interpolation in s inside the
/// grid, power-law asymptote continuation outside.
double eval_values(const RadialProfile& f, double r);

/// Derivative d f/dr at arbitrary radius, interpolating the stored samples.
double eval_derivative(const RadialProfile& f, double r);

/// lambda^{power} f(r / lambda) resampled on f's own grid.  Radii that fall
/// outside the grid after rescaling use the profile's power-law extensions,
/// so the operation is exact on pure power-law heads and tails.
RadialProfile scale_profile(const RadialProfile& f, double lambda, double power);

}  // namespace emdenlab
