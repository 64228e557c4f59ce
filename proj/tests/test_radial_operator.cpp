#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "emdenlab/radial_operator.hpp"

using namespace emdenlab;

namespace {

// max relative error of L phi for phi = r^4 against the closed form
// 20 r^2 + 3 r^4 (unit potential, n = 6, lambda = 12). The pure power keeps
// the relative truncation error uniform across the grid.
double power_error(Eigen::Index count) {
  GridPtr g = build_grid(-4.0, 1.0, count);
  Exponents e = derive_exponents(6, 3.0);
  const double lambda = mode_eigenvalue(6, 2);
  Eigen::ArrayXd w = Eigen::ArrayXd::Ones(g->count);
  Eigen::ArrayXd phi = g->r.pow(4);

  Eigen::ArrayXd got = apply_radial_operator(*g, e, lambda, w, phi);
  Eigen::ArrayXd exact = 20.0 * g->r.square() + 3.0 * phi;
  return ((got - exact) / exact).abs().maxCoeff();
}

}  // namespace

TEST_CASE("laplacian of r^2 is 2n") {
  GridPtr g = build_grid(-3.0, 3.0, 1201);
  Eigen::ArrayXd phi = g->r.square();
  Eigen::ArrayXd lap = radial_laplacian(*g, 6, 0.0, phi);
  double worst = 0;
  for (Eigen::Index i = 0; i < g->count; ++i) worst = std::max(worst, std::abs(lap[i] - 12.0));
  CHECK(worst < 1e-7);

  // with the angular eigenvalue the exact answer shifts by -lambda
  Eigen::ArrayXd lap2 = radial_laplacian(*g, 6, 12.0, phi);
  for (Eigen::Index i = 0; i < g->count; i += 100) CHECK(std::abs(lap2[i]) < 1e-6);
}

TEST_CASE("operator on a power law against the closed form") {
  CHECK(power_error(2401) < 2e-8);
}

TEST_CASE("fourth order convergence") {
  const double coarse = power_error(1201);
  const double fine = power_error(2401);
  CHECK(fine > 0);
  const double order = std::log2(coarse / fine);
  CHECK(order > 3.5);
  CHECK(order < 4.5);
}

TEST_CASE("validation") {
  GridPtr g = build_grid(-1.0, 1.0, 101);
  Exponents e = derive_exponents(6, 3.0);
  CHECK_THROWS_AS(radial_laplacian(*g, 6, 0.0, Eigen::ArrayXd::Zero(100)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      apply_radial_operator(*g, e, 0.0, Eigen::ArrayXd::Zero(100), Eigen::ArrayXd::Zero(101)),
      std::invalid_argument);
}
