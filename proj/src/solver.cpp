#include "emdenlab/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "emdenlab/radial_operator.hpp"

namespace emdenlab {

namespace {

RadialProfile negate(const RadialProfile& f) {
  return make_profile(f.grid, -f.values, -f.derivative, f.head_exponent, f.tail_exponent);
}

RadialProfile zero_profile(const GridPtr& g, double tail) {
  return make_profile(g, Eigen::ArrayXd::Zero(g->count), Eigen::ArrayXd::Zero(g->count), 0.0,
                      tail);
}

}  // namespace

ModeExpansion nonlinear_remainder(const GroundState& gs, const ModeExpansion& phi) {
  const Grid& g = *gs.grid;
  if (!phi.grid || !compatible(*phi.grid, g))
    throw std::invalid_argument("nonlinear_remainder: expansion lives on an incompatible grid");
  const double p = gs.e.p;

  Eigen::ArrayXd sum = Eigen::ArrayXd::Zero(g.count);
  Eigen::ArrayXd sum_d = Eigen::ArrayXd::Zero(g.count);
  double head_min = 0.0, tail_max = -gs.e.m;
  bool first = true;
  for (const auto& [k, pk] : phi.modes) {
    sum += pk.values;
    sum_d += pk.derivative;
    head_min = first ? pk.head_exponent : std::min(head_min, pk.head_exponent);
    tail_max = first ? pk.tail_exponent : std::max(tail_max, pk.tail_exponent);
    first = false;
  }

  const Eigen::ArrayXd& w = gs.w.values;
  const Eigen::ArrayXd& dw = gs.w.derivative;
  const Eigen::ArrayXd u_pos = (w + sum).max(0.0);
  const Eigen::ArrayXd w_pm1 = w.pow(p - 1.0);

  const Eigen::ArrayXd values = -u_pos.pow(p) + w.pow(p) + p * w_pm1 * sum;
  const Eigen::ArrayXd derivative = -p * u_pos.pow(p - 1.0) * (dw + sum_d) +
                                    p * w_pm1 * dw +
                                    p * (p - 1.0) * w.pow(p - 2.0) * dw * sum +
                                    p * w_pm1 * sum_d;

  ModeExpansion out;
  out.grid = gs.grid;
  out.modes.emplace(0, make_profile(gs.grid, values, derivative, 2.0 * head_min,
                                    -(p - 2.0) * gs.e.m + 2.0 * tail_max));
  return out;
}

double verify_solution(const GroundState& gs, const ModeExpansion& phi, const ModeExpansion& f) {
  const Grid& g = *gs.grid;
  const Exponents& e = gs.e;
  const Eigen::ArrayXd zero = Eigen::ArrayXd::Zero(g.count);

  Eigen::ArrayXd slice = zero;
  for (const auto& [k, pk] : phi.modes) slice += pk.values;

  ModeExpansion residual;
  residual.grid = gs.grid;

  // Mode 0: full equation Delta u0 + (w + Phi)_+^p + f0, with the off-slice
  // linear part p w^{p-1} (Phi - phi0) removed; reduces to the exact radial
  // residual when phi is purely radial.
  Eigen::ArrayXd phi0 = zero;
  if (auto it = phi.modes.find(0); it != phi.modes.end()) phi0 = it->second.values;
  Eigen::ArrayXd res0 = radial_laplacian(g, e.n, 0.0, gs.w.values + phi0) +
                        (gs.w.values + slice).max(0.0).pow(e.p) -
                        e.p * gs.w.values.pow(e.p - 1.0) * (slice - phi0);
  if (auto it = f.modes.find(0); it != f.modes.end()) res0 += it->second.values;
  residual.modes.emplace(0, make_profile(gs.grid, res0, zero, 0.0, 0.0));

  // Higher modes solve the linear equation L_k phi_k = -f_k.
  for (const auto& [k, pk] : phi.modes) {
    if (k == 0) continue;
    Eigen::ArrayXd rk =
        apply_radial_operator(g, e, mode_eigenvalue(e.n, k), gs.w.values, pk.values);
    if (auto it = f.modes.find(k); it != f.modes.end()) rk += it->second.values;
    residual.modes.emplace(k, make_profile(gs.grid, rk, zero, 0.0, 0.0));
  }
  for (const auto& [k, fk] : f.modes) {
    if (k == 0 || phi.modes.count(k)) continue;
    residual.modes.emplace(k, fk);
  }

  return source_norm(residual, e);
}

SolveReport picard_solve(RightInverse& T, const ModeExpansion& f, const SolveConfig& cfg,
                         ModeExpansion* out_phi) {
  if (!(cfg.rho > 0) || !(cfg.tol > 0) || cfg.max_iter < 1)
    throw std::invalid_argument("picard_solve: invalid configuration");
  const GroundState& gs = T.ground_state();
  const GridPtr grid = gs.grid;
  if (!f.grid || !compatible(*f.grid, *grid))
    throw std::invalid_argument("picard_solve: source lives on an incompatible grid");

  ModeExpansion phi;
  phi.grid = grid;
  phi.modes.emplace(0, zero_profile(grid, -gs.e.m));
  for (const auto& [k, fk] : f.modes)
    if (k != 0) phi.modes.emplace(k, zero_profile(grid, -gs.e.m));

  SolveReport rep;
  rep.f_norm = source_norm(f, gs.e);

  double prev_inc = 0.0;
  for (int it = 1; it <= cfg.max_iter; ++it) {
    ModeExpansion rhs = nonlinear_remainder(gs, phi);
    for (const auto& [k, fk] : f.modes) {
      auto slot = rhs.modes.find(k);
      if (slot == rhs.modes.end())
        rhs.modes.emplace(k, negate(fk));
      else
        slot->second = axpy(slot->second, -1.0, fk);
    }

    ModeExpansion next = T.apply(rhs);

    ModeExpansion diff;
    diff.grid = grid;
    for (const auto& [k, nk] : next.modes) {
      auto old = phi.modes.find(k);
      diff.modes.emplace(k, old == phi.modes.end() ? nk : axpy(nk, -1.0, old->second));
    }
    rep.increment = solution_norm(diff, gs.e);
    rep.increments.push_back(rep.increment);
    if (it >= 2 && prev_inc > 0.0)
      rep.contraction_ratio = std::max(rep.contraction_ratio, rep.increment / prev_inc);
    prev_inc = rep.increment;

    phi = std::move(next);
    rep.iterations = it;
    rep.phi_norm = solution_norm(phi, gs.e);
    if (rep.phi_norm > cfg.rho) {
      rep.status = SolveStatus::left_ball;
      break;
    }
    if (rep.increment <= cfg.tol) {
      rep.status = SolveStatus::converged;
      break;
    }
  }

  const Eigen::ArrayXd slack = 1.0 - mode_abs_sum(phi) / gs.w.values;
  rep.positivity_margin = slack.minCoeff();
  if (cfg.check_positivity && rep.status == SolveStatus::converged &&
      rep.positivity_margin <= 0.0)
    rep.status = SolveStatus::not_positive;
  rep.residual = verify_solution(gs, phi, f);
  if (out_phi) *out_phi = std::move(phi);
  return rep;
}

double family_annulus_sup(const GroundState& gs, const ModeExpansion& phi, double lambda) {
  Eigen::ArrayXd env = gs.w.values;
  for (const auto& [k, pk] : phi.modes)
    env += k == 0 ? pk.values : pk.values.abs();
  const double scale = std::pow(lambda, gs.e.m);
  const double s_lo = std::log(0.5 * lambda), s_hi = std::log(2.0 * lambda);
  double sup = 0;
  for (Eigen::Index i = 0; i < gs.grid->count; ++i)
    if (gs.grid->s[i] >= s_lo && gs.grid->s[i] <= s_hi)
      sup = std::max(sup, scale * env[i]);
  return sup;
}

std::vector<FamilyEntry> assemble_family(RightInverse& T, const SourceSpec& spec,
                                         const std::vector<double>& lambdas,
                                         const SolveConfig& cfg) {
  const GroundState& gs = T.ground_state();
  std::vector<FamilyEntry> out;
  out.reserve(lambdas.size());
  for (const double lambda : lambdas) {
    FamilyEntry entry;
    entry.lambda = lambda;
    ModeExpansion f;
    f.grid = gs.grid;
    f.modes.emplace(spec.k, rescaled_source_profile(gs.grid, spec, lambda, gs.e.m));

    ModeExpansion phi;
    entry.report = picard_solve(T, f, cfg, &phi);
    entry.f_norm = entry.report.f_norm;
    entry.phi_norm = entry.report.phi_norm;

    entry.annulus_sup = family_annulus_sup(gs, phi, lambda);
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace emdenlab
