#include "emdenlab/linear_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "emdenlab/interpolation.hpp"
#include "emdenlab/ode.hpp"
#include "emdenlab/quadrature.hpp"

namespace emdenlab {

namespace {

double pow_pos(double x, double p) { return x > 0.0 ? std::pow(x, p) : 0.0; }

// Mode equation in s = log r: zeta'' + (n-2) zeta' + (p v^{p-1} - lambda) zeta = 0,
// with the potential read off the stored Fowler orbit.
void integrate_mode(const GroundState& gs, double lambda, double t0, const Eigen::Vector2d& z0,
                    bool forward, Eigen::ArrayXd& zeta, Eigen::ArrayXd& zeta_s) {
  const Grid& g = *gs.grid;
  const Exponents& e = gs.e;
  auto rhs = [&](double s, const Eigen::Vector2d& y, Eigen::Vector2d& dy) {
    const double v = interp_uniform(gs.v, g.s_min, g.step, s);
    dy[0] = y[1];
    dy[1] = -(e.n - 2.0) * y[1] - (e.p * pow_pos(v, e.p - 1.0) - lambda) * y[0];
  };
  auto guard = [](double, const Eigen::Vector2d& y) {
    if (!y.allFinite()) throw IntegrationError("homogeneous mode solution overflowed");
  };
  if (forward) {
    integrate_nodes(rhs, t0, z0, g.s, zeta, zeta_s, OdeOptions{}, guard);
  } else {
    const Eigen::ArrayXd rev = g.s.reverse();
    Eigen::ArrayXd a, b;
    integrate_nodes(rhs, t0, z0, rev, a, b, OdeOptions{}, guard);
    zeta = a.reverse();
    zeta_s = b.reverse();
  }
}

RadialProfile to_profile(const GridPtr& grid, const Eigen::ArrayXd& zeta,
                         const Eigen::ArrayXd& zeta_s, double head, double tail) {
  const Eigen::ArrayXd dz = zeta_s * (-grid->s).exp();
  return make_profile(grid, zeta, dz, head, tail);
}

}  // namespace

HomogeneousPair homogeneous_pair(const GroundState& gs, int k) {
  if (k == 1 || k < 0)
    throw std::invalid_argument("homogeneous_pair: defined for k = 0 and k >= 2");
  const Grid& g = *gs.grid;
  const Exponents& e = gs.e;
  const double lambda = mode_eigenvalue(e.n, k);

  HomogeneousPair pair;
  pair.k = k;

  if (k == 0) {
    // Regular branch grown outward from the scaling kernel r w' + m w, whose
    // Taylor seed is m (1 - p/(2n) r^2 + ...).  Integrating instead of
    // sampling the closed form keeps the node values smooth to stencil
    // accuracy where the closed form would cancel catastrophically.
    const double cg = -e.p / (2.0 * e.n);
    const double r0sq = std::exp(2.0 * g.s_min);
    const Eigen::Vector2d zg0(e.m * (1.0 + cg * r0sq), 2.0 * e.m * cg * r0sq);
    Eigen::ArrayXd zeta, zeta_s;
    integrate_mode(gs, lambda, g.s_min, zg0, true, zeta, zeta_s);

    // Both solutions share the far-field envelope, so the pair seeded at the
    // origin degenerates: the singular branch arrives at the wave zone almost
    // parallel to the kernel and the Green function loses its bound.  Seed
    // the second branch at the outer boundary instead, orthogonal to the
    // kernel's terminal state; inward it still picks up r^{2-n}.
    const Eigen::Vector2d zd1(-zeta_s[g.count - 1], zeta[g.count - 1]);
    Eigen::ArrayXd zeta_d, zeta_d_s;
    integrate_mode(gs, lambda, g.s_max, zd1, false, zeta_d, zeta_d_s);

    const double half = 0.5 * (e.n - 2.0);
    const double disc = half * half - e.p * e.beta;
    const double tail_g = disc > 0 ? -half + std::sqrt(disc) : -half;
    const double tail_d = disc > 0 ? -half - std::sqrt(disc) : -half;
    pair.grow = to_profile(gs.grid, zeta, zeta_s, 0.0, tail_g);
    pair.dec = to_profile(gs.grid, zeta_d, zeta_d_s, 2.0 - e.n, tail_d);
  } else {
    // Regular branch grown outward from r^k (1 + c r^2 + ...).
    const double c = -e.p / (4.0 * k + 2.0 * e.n);
    const double s0 = g.s_min;
    const double lead = std::exp(double(k) * s0);
    const double corr = c * std::exp((k + 2.0) * s0);
    const Eigen::Vector2d zg0(lead + corr, double(k) * lead + (k + 2.0) * corr);
    Eigen::ArrayXd zeta, zeta_s;
    integrate_mode(gs, lambda, s0, zg0, true, zeta, zeta_s);

    // Recessive branch brought inward from the far-field power r^{a-},
    // where a^2 + (n-2) a + (p beta - lambda) = 0.
    const double disc = (e.n - 2.0) * (e.n - 2.0) + 4.0 * (lambda - e.p * e.beta);
    if (!(disc > 0))
      throw std::domain_error("homogeneous_pair: far-field exponents are not real");
    const double a_minus = 0.5 * (-(e.n - 2.0) - std::sqrt(disc));
    const double a_plus = 0.5 * (-(e.n - 2.0) + std::sqrt(disc));
    const double s1 = g.s_max;
    const double zd1 = std::exp(a_minus * s1);
    const Eigen::Vector2d zd0(zd1, a_minus * zd1);
    Eigen::ArrayXd zeta_d, zeta_d_s;
    integrate_mode(gs, lambda, s1, zd0, false, zeta_d, zeta_d_s);

    pair.grow = to_profile(gs.grid, zeta, zeta_s, double(k), a_plus);
    pair.dec = to_profile(gs.grid, zeta_d, zeta_d_s, 2.0 - e.n - k, a_minus);
  }

  // Normalize the scaled Wronskian r^{n-1} (zg zd' - zg' zd) to -1.
  Eigen::ArrayXd wr = ((e.n - 1.0) * g.s).exp() *
                      (pair.grow.values * pair.dec.derivative -
                       pair.grow.derivative * pair.dec.values);
  const double scale = -1.0 / wr[g.count / 2];
  pair.dec.values *= scale;
  pair.dec.derivative *= scale;
  pair.wronskian_drift = (wr * scale + 1.0).abs().maxCoeff();
  return pair;
}

RadialProfile solve_mode(const GroundState& gs, const HomogeneousPair& pair,
                         const RadialProfile& h) {
  const Grid& g = *gs.grid;
  const int n = gs.e.n;
  if (!h.grid || !compatible(*h.grid, g))
    throw std::invalid_argument("solve_mode: source lives on an incompatible grid");

  const Eigen::ArrayXd ig_grow = pair.grow.values * h.values;
  const Eigen::ArrayXd ig_dec = pair.dec.values * h.values;

  const CumulativeIntegrals from_origin = cumulative_integrals(
      g, ig_grow, n - 1.0, pair.grow.head_exponent + h.head_exponent);
  if (!from_origin.head_integrable)
    throw std::domain_error("solve_mode: source is not integrable against the regular branch");
  const Eigen::ArrayXd B = -from_origin.from_left;

  Eigen::ArrayXd A;
  if (pair.k == 0) {
    const CumulativeIntegrals anchored = cumulative_integrals(
        g, ig_dec, n - 1.0, pair.dec.head_exponent + h.head_exponent);
    const double s_anchor = std::clamp(0.0, g.s_min, g.s_max);
    A = anchored.from_left - interp_at(g, anchored.from_left, s_anchor);
  } else {
    const CumulativeIntegrals from_far = cumulative_integrals(g, ig_dec, n - 1.0, 0.0);
    A = -from_far.from_right;
  }

  const Eigen::ArrayXd values = pair.grow.values * A + pair.dec.values * B;
  const Eigen::ArrayXd derivative = pair.grow.derivative * A + pair.dec.derivative * B;
  const double head =
      pair.k == 0 ? std::min(0.0, h.head_exponent + 2.0)
                  : std::min(double(pair.k), h.head_exponent + 2.0);
  return make_profile(gs.grid, values, derivative, head, h.tail_exponent + 2.0);
}

RadialProfile solve_mode1(const GroundState& gs, const RadialProfile& h) {
  const Grid& g = *gs.grid;
  const Exponents& e = gs.e;
  if (!(e.p > e.p_mode1))
    throw std::domain_error("solve_mode1: requires p > (n+1)/(n-3)");
  if (!h.grid || !compatible(*h.grid, g))
    throw std::invalid_argument("solve_mode1: source lives on an incompatible grid");

  // Translation kernel z1 = -w' > 0, z1' = (n-1)/r w' + w^p.
  const Eigen::ArrayXd z1 = -gs.w.derivative;
  const Eigen::ArrayXd dz1 = (e.n - 1.0) / g.r * gs.w.derivative + gs.w.values.pow(e.p);

  const CumulativeIntegrals inner = cumulative_integrals(
      g, z1 * h.values, e.n - 1.0, 1.0 + h.head_exponent);
  if (!inner.head_integrable)
    throw std::domain_error("solve_mode1: source is not integrable against the kernel");

  // (r^{n-1} z1^2 psi')' = r^{n-1} z1 h, psi anchored at r = 1.
  const Eigen::ArrayXd G = inner.from_left / z1.square() * ((1.0 - e.n) * g.s).exp();
  const CumulativeIntegrals outer = cumulative_integrals(g, G, 0.0, 0.0);
  const double s_anchor = std::clamp(0.0, g.s_min, g.s_max);
  const Eigen::ArrayXd psi = outer.from_left - interp_at(g, outer.from_left, s_anchor);

  const Eigen::ArrayXd values = z1 * psi;
  const Eigen::ArrayXd derivative = dz1 * psi + z1 * G;
  return make_profile(gs.grid, values, derivative, 1.0, h.tail_exponent + 2.0);
}

RightInverse::RightInverse(GroundState gs) : gs_(std::move(gs)) {}

const HomogeneousPair& RightInverse::pair(int k) {
  auto it = pairs_.find(k);
  if (it == pairs_.end()) it = pairs_.emplace(k, homogeneous_pair(gs_, k)).first;
  return it->second;
}

RadialProfile RightInverse::apply_mode(int k, const RadialProfile& h) {
  if (k == 1) return solve_mode1(gs_, h);
  return solve_mode(gs_, pair(k), h);
}

ModeExpansion RightInverse::apply(const ModeExpansion& h) {
  if (!h.grid || !compatible(*h.grid, *gs_.grid))
    throw std::invalid_argument("RightInverse::apply: expansion lives on an incompatible grid");
  ModeExpansion out;
  out.grid = gs_.grid;
  for (const auto& [k, hk] : h.modes) out.modes.emplace(k, apply_mode(k, hk));
  return out;
}

}  // namespace emdenlab
