#include "emdenlab/ground_state.hpp"

#include <cmath>
#include <stdexcept>

#include "emdenlab/finite_difference.hpp"
#include "emdenlab/ode.hpp"

namespace emdenlab {

namespace {

double pow_pos(double x, double p) { return x > 0.0 ? std::pow(x, p) : 0.0; }

}  // namespace

double terminal_energy(const Exponents& e) {
  return std::pow(e.beta, (e.p + 1.0) / (e.p - 1.0)) * (1.0 / (e.p + 1.0) - 0.5);
}

Eigen::ArrayXd fowler_residual(const Exponents& e, const Grid& g, const Eigen::ArrayXd& v,
                               const Eigen::ArrayXd& v_prime) {
  if (v.size() != g.count || v_prime.size() != g.count)
    throw std::invalid_argument("fowler_residual: sample count does not match the grid");
  const Eigen::ArrayXd v_second = differentiate(v_prime, g.step, 1);
  return v_second + e.alpha * v_prime - e.beta * v + v.max(0.0).pow(e.p);
}

HeteroclinicOrbit integrate_heteroclinic(const Exponents& e, const GridPtr& grid, double delta) {
  if (!grid) throw std::invalid_argument("integrate_heteroclinic: null grid");
  if (!(delta > 0) || !(delta < e.L))
    throw std::invalid_argument("integrate_heteroclinic: seed amplitude must lie in (0, L)");
  const Grid& g = *grid;

  auto rhs = [&e](double, const Eigen::Vector2d& y, Eigen::Vector2d& dy) {
    dy[0] = y[1];
    dy[1] = -e.alpha * y[1] + e.beta * y[0] - pow_pos(y[0], e.p);
  };
  const double cap = 5.0 * e.L;
  auto guard = [cap](double, const Eigen::Vector2d& y) {
    if (!(std::abs(y[0]) <= cap) || !std::isfinite(y[1]))
      throw IntegrationError("connecting orbit left its invariant region");
  };

  HeteroclinicOrbit orbit;
  orbit.grid = grid;
  orbit.delta = delta;
  integrate_nodes(rhs, g.s_min, Eigen::Vector2d(delta, e.m * delta), g.s, orbit.v, orbit.v_prime,
                  OdeOptions{}, guard);
  orbit.energy = 0.5 * orbit.v_prime.square() + orbit.v.max(0.0).pow(e.p + 1.0) / (e.p + 1.0) -
                 0.5 * e.beta * orbit.v.square();
  return orbit;
}

GroundState compute_ground_state(const Exponents& e, const GridPtr& grid, double delta) {
  if (!grid) throw std::invalid_argument("compute_ground_state: null grid");
  if (!(delta > 0) || !(delta < 1e-3))
    throw std::invalid_argument("compute_ground_state: relative seed amplitude out of (0, 1e-3)");
  const Grid& g = *grid;

  // Unstable-manifold expansion of the normalized orbit: v = e^{ms} + c1 e^{qs}
  // with q = pm = m + 2 and c1 = -1/(2n), matching w = 1 - r^2/(2n) + ...
  const double s_target = std::log(delta * e.L) / e.m;
  const double s_seed = std::min(g.s_min, s_target);
  const double c1 = -1.0 / (2.0 * e.n);
  const double q = e.m + 2.0;
  const double em = std::exp(e.m * s_seed);
  const double eq = std::exp(q * s_seed);
  const Eigen::Vector2d y0(em + c1 * eq, e.m * em + q * c1 * eq);

  auto rhs = [&e](double, const Eigen::Vector2d& y, Eigen::Vector2d& dy) {
    dy[0] = y[1];
    dy[1] = -e.alpha * y[1] + e.beta * y[0] - pow_pos(y[0], e.p);
  };
  const double cap = 5.0 * e.L;
  auto guard = [cap](double, const Eigen::Vector2d& y) {
    if (!(std::abs(y[0]) <= cap) || !std::isfinite(y[1]))
      throw IntegrationError("connecting orbit left its invariant region");
  };

  GroundState gs;
  gs.e = e;
  gs.grid = grid;
  gs.delta = delta;
  gs.shift = g.s_min - s_target;
  integrate_nodes(rhs, s_seed, y0, g.s, gs.v, gs.v_prime, OdeOptions{}, guard);

  const Eigen::ArrayXd w = gs.v * (-e.m * g.s).exp();
  const Eigen::ArrayXd dw = (gs.v_prime - e.m * gs.v) * (-(e.m + 1.0) * g.s).exp();
  gs.w = make_profile(grid, w, dw, 0.0, -e.m);
  gs.L_measured = gs.v[g.count - 1];
  return gs;
}

Eigen::ArrayXd shoot_direct(const Exponents& e, const Grid& g, double r_seed) {
  if (!(r_seed > 0) || !(r_seed <= g.r[0]))
    throw std::invalid_argument("shoot_direct: seed radius must lie at or below the grid");

  const double c4 = e.p / (2.0 * e.n * (4.0 * e.n + 8.0));
  const double r2 = r_seed * r_seed;
  const Eigen::Vector2d y0(1.0 - r2 / (2.0 * e.n) + c4 * r2 * r2,
                           -r_seed / e.n + 4.0 * c4 * r2 * r_seed);

  auto rhs = [&e](double r, const Eigen::Vector2d& y, Eigen::Vector2d& dy) {
    dy[0] = y[1];
    dy[1] = -(e.n - 1.0) / r * y[1] - pow_pos(y[0], e.p);
  };

  OdeOptions opt;
  opt.max_step = g.r[g.count - 1];
  Eigen::ArrayXd w, w_prime;
  integrate_nodes(rhs, r_seed, y0, g.r, w, w_prime, opt);
  return w;
}

}  // namespace emdenlab
