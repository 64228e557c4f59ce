#pragma once

#include <Eigen/Dense>
#include <stdexcept>

#include "emdenlab/exponents.hpp"
#include "emdenlab/grid.hpp"
#include "emdenlab/ground_state.hpp"
#include "emdenlab/interpolation.hpp"
#include "emdenlab/ode.hpp"

namespace emdenlab::testsupport {

/// Independent two-point boundary-value oracle for the mode equation.
/// Solves, in log radius with second-order central differences and a Thomas
/// tridiagonal sweep,
///     phi_ss + (n-2) phi_s + (p v_+^{p-1} - lambda) phi = e^{2s} h
/// on the node range [j0, j1] with Dirichlet values `left`, `right` at the
/// range ends.  Returns the j1 - j0 + 1 solution values.
inline Eigen::ArrayXd bvp_mode_solve(const GroundState& gs, double lambda,
                                     const Eigen::ArrayXd& h, Eigen::Index j0,
                                     Eigen::Index j1, double left, double right) {
  const Grid& g = *gs.grid;
  if (h.size() != g.count) throw std::invalid_argument("bvp_mode_solve: size mismatch");
  if (j0 < 0 || j1 >= g.count || j1 - j0 < 2)
    throw std::invalid_argument("bvp_mode_solve: bad node range");
  const double dx = g.step;
  const double drift = static_cast<double>(gs.e.n) - 2.0;

  const Eigen::Index count = j1 - j0 + 1;
  Eigen::ArrayXd pot(count), rhs(count);
  for (Eigen::Index i = 0; i < count; ++i) {
    const Eigen::Index j = j0 + i;
    pot[i] = gs.e.p * std::pow(std::max(gs.v[j], 0.0), gs.e.p - 1.0) - lambda;
    rhs[i] = std::exp(2.0 * g.s[j]) * h[j];
  }

  const double lo = 1.0 / (dx * dx) - drift / (2.0 * dx);
  const double hi = 1.0 / (dx * dx) + drift / (2.0 * dx);

  const Eigen::Index m = count - 2;
  Eigen::ArrayXd diag(m), r(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    diag[i] = -2.0 / (dx * dx) + pot[i + 1];
    r[i] = rhs[i + 1];
  }
  r[0] -= lo * left;
  r[m - 1] -= hi * right;

  for (Eigen::Index i = 1; i < m; ++i) {
    const double w = lo / diag[i - 1];
    diag[i] -= w * hi;
    r[i] -= w * r[i - 1];
  }
  Eigen::ArrayXd phi(count);
  phi[0] = left;
  phi[count - 1] = right;
  phi[count - 2] = r[m - 1] / diag[m - 1];
  for (Eigen::Index i = m - 2; i >= 0; --i)
    phi[i + 1] = (r[i] - hi * phi[i + 2]) / diag[i];
  return phi;
}

/// Initial-value oracle for the same equation: integrates the inhomogeneous
/// mode equation from given state (phi, phi_s) at node j0 and returns the
/// solution values on nodes j0..j1.  Suited to mode 0, where the propagation
/// is neutral-to-contractive rightward of the core.
inline Eigen::ArrayXd ivp_mode_solve(const GroundState& gs, double lambda,
                                     const Eigen::ArrayXd& h, Eigen::Index j0,
                                     Eigen::Index j1, double phi0, double phi_s0) {
  const Grid& g = *gs.grid;
  if (h.size() != g.count) throw std::invalid_argument("ivp_mode_solve: size mismatch");
  if (j0 < 0 || j1 >= g.count || j1 <= j0)
    throw std::invalid_argument("ivp_mode_solve: bad node range");
  auto rhs = [&](double s, const Eigen::Vector2d& y, Eigen::Vector2d& dy) {
    const double v = std::max(interp_uniform(gs.v, g.s_min, g.step, s), 0.0);
    const double hval = interp_uniform(h, g.s_min, g.step, s);
    dy[0] = y[1];
    dy[1] = -(gs.e.n - 2.0) * y[1] -
            (gs.e.p * std::pow(v, gs.e.p - 1.0) - lambda) * y[0] +
            std::exp(2.0 * s) * hval;
  };
  Eigen::ArrayXd phi, phi_s;
  integrate_nodes(rhs, g.s[j0], Eigen::Vector2d(phi0, phi_s0),
                  g.s.segment(j0, j1 - j0 + 1), phi, phi_s, OdeOptions{});
  return phi;
}

}  // namespace emdenlab::testsupport
