#pragma once

#include <Eigen/Dense>

#include "emdenlab/exponents.hpp"
#include "emdenlab/grid.hpp"

namespace emdenlab {

/// Linearized operator at the profile w on one spherical-harmonic mode:
///   L_lambda(phi) = phi'' + (n-1)/r phi' - lambda/r^2 phi + p w^{p-1} phi.
/// Evaluated in s = log r, where it reads
///   e^{-2s} (phi_ss + (n-2) phi_s - lambda phi) + p w^{p-1} phi.
Eigen::ArrayXd apply_radial_operator(const Grid& g, const Exponents& e, double lambda,
                                     const Eigen::ArrayXd& w, const Eigen::ArrayXd& phi);

/// Radial part of the Laplacian on mode k: phi'' + (n-1)/r phi' - lambda_k/r^2 phi.
Eigen::ArrayXd radial_laplacian(const Grid& g, int n, double lambda, const Eigen::ArrayXd& phi);

}  // namespace emdenlab
