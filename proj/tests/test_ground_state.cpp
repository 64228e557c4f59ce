#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "emdenlab/finite_difference.hpp"
#include "emdenlab/ground_state.hpp"
#include "emdenlab/interpolation.hpp"

using namespace emdenlab;

namespace {

GridPtr default_grid() { return build_grid(-12.0, 12.0, 4801); }

}  // namespace

TEST_CASE("terminal energy closed form") {
  Exponents e = derive_exponents(6, 3.0);
  CHECK(terminal_energy(e) == doctest::Approx(-2.25).epsilon(1e-15));
}

TEST_CASE("normalized ground state matches the origin expansion") {
  Exponents e = derive_exponents(6, 3.0);
  GroundState gs = compute_ground_state(e, default_grid());

  const double r = 0.01;
  const double taylor = 1.0 - r * r / 12.0 + std::pow(r, 4) / 128.0;
  CHECK(std::abs(eval_values(gs.w, r) - taylor) < 1e-11);

  // w(0) -> 1 along the grid head
  CHECK(gs.w.values[0] == doctest::Approx(1.0).epsilon(1e-9));
  // derivative head: w' ~ -r/n
  CHECK(eval_derivative(gs.w, r) == doctest::Approx(-r / 6.0).epsilon(1e-4));
}

TEST_CASE("singular amplitude is reached at the outer edge") {
  Exponents e = derive_exponents(6, 3.0);
  GroundState gs = compute_ground_state(e, default_grid());
  CHECK(std::abs(gs.L_measured - std::sqrt(3.0)) < 1e-4);
  // r^m w at r = e^8 within one percent of L
  const Grid& g = *gs.grid;
  Eigen::Index i8 = 0;
  while (g.s[i8] < 8.0) ++i8;
  CHECK(std::abs(gs.v[i8] - e.L) < 1e-2 * e.L);
}

TEST_CASE("fowler residual of the computed orbit is small") {
  Exponents e = derive_exponents(6, 3.0);
  GroundState gs = compute_ground_state(e, default_grid());
  Eigen::ArrayXd res = fowler_residual(e, *gs.grid, gs.v, gs.v_prime);
  CHECK(res.abs().maxCoeff() < 1e-8);
}

TEST_CASE("energy decays monotonically to the terminal value") {
  Exponents e = derive_exponents(6, 3.0);
  GridPtr g = default_grid();
  HeteroclinicOrbit orbit = integrate_heteroclinic(e, g, 1e-8 * e.L);

  CHECK(std::abs(orbit.energy[0]) < 1e-14);
  // the small-seed orbit reaches the equilibrium neighborhood around s = 6,
  // leaving six e-folds of envelope decay; measured gap is 8.6e-6
  CHECK(std::abs(orbit.energy[g->count - 1] - terminal_energy(e)) < 1e-4);
  for (Eigen::Index i = 1; i < g->count; ++i)
    CHECK(orbit.energy[i] <= orbit.energy[i - 1] + 1e-10);

  // dE/ds = -alpha v'^2
  Eigen::ArrayXd dE = differentiate(orbit.energy, g->step, 1);
  Eigen::ArrayXd expect = -e.alpha * orbit.v_prime.square();
  double worst = 0;
  for (Eigen::Index i = 400; i < g->count - 400; ++i)
    worst = std::max(worst, std::abs(dE[i] - expect[i]));
  CHECK(worst < 1e-6);
}

TEST_CASE("direct shooting in r reproduces the profile") {
  Exponents e = derive_exponents(6, 3.0);
  GroundState gs = compute_ground_state(e, default_grid());

  GridPtr sub = build_grid(-4.0, 4.0, 1601);
  Eigen::ArrayXd shot = shoot_direct(e, *sub);
  double worst = 0;
  for (Eigen::Index i = 0; i < sub->count; ++i)
    worst = std::max(worst, std::abs(shot[i] - eval_values(gs.w, sub->r[i])));
  CHECK(worst < 1e-7);

  CHECK_THROWS_AS(shoot_direct(e, *sub, 1.0), std::invalid_argument);
}

TEST_CASE("seed amplitude insensitivity") {
  Exponents e = derive_exponents(6, 3.0);
  GridPtr g = default_grid();
  GroundState a = compute_ground_state(e, g, 1e-8);
  GroundState b = compute_ground_state(e, g, 5e-9);
  CHECK((a.w.values - b.w.values).abs().maxCoeff() < 1e-9);
  CHECK((a.v - b.v).abs().maxCoeff() < 1e-9);
}

TEST_CASE("spec seeded orbit is the normalized orbit translated") {
  Exponents e = derive_exponents(6, 3.0);
  GridPtr g = default_grid();
  const double delta = 1e-8;
  GroundState gs = compute_ground_state(e, g, delta);
  HeteroclinicOrbit orbit = integrate_heteroclinic(e, g, delta * e.L);

  // v_orbit(s) = v(s - shift), shift = s_min - log(delta L)/m
  for (double s : {-2.0, 0.0, 2.0, 5.0}) {
    const Eigen::Index i = Eigen::Index(std::lround((s - g->s_min) / g->step));
    REQUIRE(std::abs(g->s[i] - s) < 1e-12);
    const double shifted = interp_uniform(orbit.v, g->s_min, g->step, s + gs.shift);
    CHECK(std::abs(gs.v[i] - shifted) < 1e-7);
  }
}

TEST_CASE("ground state in a non integer exponent regime") {
  Exponents e = derive_exponents(6, 2.2);
  GroundState gs = compute_ground_state(e, default_grid());

  const double r = 0.01;
  const double c4 = 2.2 / (2.0 * 6.0 * 32.0);
  const double taylor = 1.0 - r * r / 12.0 + c4 * std::pow(r, 4);
  CHECK(std::abs(eval_values(gs.w, r) - taylor) < 1e-9);
  CHECK(std::abs(gs.L_measured - e.L) < 0.02 * e.L);
  CHECK((gs.w.values > 0.0).all());
}

TEST_CASE("input validation") {
  Exponents e = derive_exponents(6, 3.0);
  GridPtr g = build_grid(-6.0, 6.0, 241);
  CHECK_THROWS_AS(compute_ground_state(e, nullptr), std::invalid_argument);
  CHECK_THROWS_AS(compute_ground_state(e, g, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(compute_ground_state(e, g, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(integrate_heteroclinic(e, g, 2.0 * e.L), std::invalid_argument);
}
