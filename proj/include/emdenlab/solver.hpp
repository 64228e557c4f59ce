#pragma once

#include <vector>

#include "emdenlab/linear_solver.hpp"
#include "emdenlab/norms.hpp"
#include "emdenlab/source.hpp"

namespace emdenlab {

struct SolveConfig {
  double rho = 0.1;     ///< ball radius in the solution norm
  double tol = 1e-10;   ///< stop when the iterate increment drops below this
  int max_iter = 50;
  bool check_positivity = true;
};

enum class SolveStatus {
  converged,
  max_iterations,
  left_ball,
  not_positive,
};

struct SolveReport {
  SolveStatus status = SolveStatus::max_iterations;
  int iterations = 0;
  double increment = 0;          ///< last iterate increment in the solution norm
  double contraction_ratio = 0;  ///< max observed ratio of successive increments
  double phi_norm = 0;
  double f_norm = 0;             ///< source norm of f
  double residual = 0;           ///< weighted residual of the solved system
  double positivity_margin = 0;  ///< min over nodes of 1 - sum_k |phi_k| / w
  std::vector<double> increments;
};

/// N(phi) = -(w + Phi)_+^p + w^p + p w^{p-1} Phi evaluated on the coefficient
/// sum Phi = sum_k phi_k and carried on mode 0; exact when phi is radial.
ModeExpansion nonlinear_remainder(const GroundState& gs, const ModeExpansion& phi);

/// Weighted residual of the solved system: the full radial equation
/// Delta u + u_+^p + f_0 on mode 0 with u = w + Phi, and the linearized
/// equation L_k phi_k + f_k on the higher modes.
double verify_solution(const GroundState& gs, const ModeExpansion& phi, const ModeExpansion& f);

/// Picard iteration phi <- T(N(phi) - f) starting from zero. Stops on
/// increment tolerance, iteration budget, or on leaving the ball.
SolveReport picard_solve(RightInverse& T, const ModeExpansion& f, const SolveConfig& cfg,
                         ModeExpansion* out_phi = nullptr);

struct FamilyEntry {
  double lambda = 1;
  double f_norm = 0;
  double phi_norm = 0;
  double annulus_sup = 0;  ///< sup of u_lambda = lambda^m (w + Phi)(lambda .) on 0.5 <= |x| <= 2
  SolveReport report;
};

/// sup of the assembled solution u_lambda = lambda^m (w + Phi)(lambda .) over
/// the annulus 0.5 <= |x| <= 2, with harmonic coefficients bounded by their
/// magnitude.
double family_annulus_sup(const GroundState& gs, const ModeExpansion& phi, double lambda);

/// Solves the rescaled family f_lambda = lambda^{-(2+m)} f(./lambda) for each
/// given lambda with a shared ground state and cached mode pairs.
std::vector<FamilyEntry> assemble_family(RightInverse& T, const SourceSpec& spec,
                                         const std::vector<double>& lambdas,
                                         const SolveConfig& cfg);

}  // namespace emdenlab
