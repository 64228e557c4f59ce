#include "emdenlab/radial_operator.hpp"

#include <stdexcept>

#include "emdenlab/finite_difference.hpp"

namespace emdenlab {

Eigen::ArrayXd radial_laplacian(const Grid& g, int n, double lambda, const Eigen::ArrayXd& phi) {
  if (phi.size() != g.count)
    throw std::invalid_argument("radial_laplacian: sample count does not match the grid");
  const Eigen::ArrayXd phi_s = differentiate(phi, g.step, 1);
  const Eigen::ArrayXd phi_ss = differentiate(phi, g.step, 2);
  return (phi_ss + double(n - 2) * phi_s - lambda * phi) * (-2.0 * g.s).exp();
}

Eigen::ArrayXd apply_radial_operator(const Grid& g, const Exponents& e, double lambda,
                                     const Eigen::ArrayXd& w, const Eigen::ArrayXd& phi) {
  if (w.size() != g.count)
    throw std::invalid_argument("apply_radial_operator: profile does not match the grid");
  return radial_laplacian(g, e.n, lambda, phi) + e.p * w.max(0.0).pow(e.p - 1.0) * phi;
}

}  // namespace emdenlab
