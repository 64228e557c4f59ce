#pragma once

#include <Eigen/Core>

#include "emdenlab/exponents.hpp"
#include "emdenlab/grid.hpp"

namespace emdenlab {

/// Connecting orbit of v'' + alpha v' - beta v + v^p = 0, sampled on a grid
/// in s = log r. Runs from the zero equilibrium (s -> -infinity) into the
/// oscillatory approach to v = L.
struct HeteroclinicOrbit {
  GridPtr grid;
  Eigen::ArrayXd v;
  Eigen::ArrayXd v_prime;
  Eigen::ArrayXd energy;  ///< v'^2/2 + v^{p+1}/(p+1) - beta v^2/2
  double delta = 0;       ///< seed amplitude used at s_min
};

/// Integrates the connecting orbit from the seed v = delta, v' = m delta at
/// s_min. delta is an absolute amplitude; it must be small enough that the
/// seed sits on the unstable manifold to rounding accuracy.
HeteroclinicOrbit integrate_heteroclinic(const Exponents& e, const GridPtr& grid, double delta);

/// Radial ground state normalized to w(0) = 1:
///   w'' + (n-1)/r w' + w^p = 0,  w > 0,  r^m w -> L.
struct GroundState {
  Exponents e;
  GridPtr grid;
  RadialProfile w;            ///< head exponent 0, tail exponent -m
  Eigen::ArrayXd v, v_prime;  ///< the same orbit in Fowler variables
  double L_measured = 0;      ///< r^m w at the outer grid edge
  double delta = 0;           ///< relative seed amplitude used
  double shift = 0;           ///< log-radius translation fixing w(0) = 1
};

/// Computes the normalized ground state by seeding the connecting orbit on
/// its unstable manifold with the translation already fixed:
///   v = e^{ms} - e^{pms}/(2n) at s_seed = min(s_min, log(delta * L)/m).
/// delta is relative to the singular amplitude L.
GroundState compute_ground_state(const Exponents& e, const GridPtr& grid, double delta = 1e-8);

/// Independent check: shoots w'' + (n-1)/r w' + w^p = 0 directly in r from a
/// fourth-order Taylor seed at r_seed, returning w at the grid radii.
Eigen::ArrayXd shoot_direct(const Exponents& e, const Grid& g, double r_seed = 1e-6);

/// v'' + alpha v' - beta v + v^p at the grid nodes, with v'' obtained by
/// differentiating the sampled v'. Equals r^{m+2} (Delta w + w^p) exactly.
Eigen::ArrayXd fowler_residual(const Exponents& e, const Grid& g, const Eigen::ArrayXd& v,
                               const Eigen::ArrayXd& v_prime);

/// Energy of the v = L equilibrium: beta^{(p+1)/(p-1)} (1/(p+1) - 1/2).
double terminal_energy(const Exponents& e);

}  // namespace emdenlab
