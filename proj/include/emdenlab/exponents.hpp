#pragma once

#include <optional>

namespace emdenlab {

/// Scaling data derived from the dimension n and the supercritical power p
/// of the radial equation  u'' + (n-1)/r u' + u^p + f = 0.
struct Exponents {
  int n = 0;            ///< space dimension, n >= 4
  double p = 0;         ///< nonlinearity power, p > (n+2)/(n-2)
  double m = 0;         ///< far-field decay power 2/(p-1)
  double alpha = 0;     ///< phase-plane damping n - 2 - 4/(p-1)
  double beta = 0;      ///< phase-plane linear coefficient m*(n-2-m)
  double L = 0;         ///< amplitude beta^{1/(p-1)} of the singular profile
  double sigma = 0;     ///< inner weight power, default m, 0 < sigma < n-2
  double p_serrin = 0;      ///< (n+2)/(n-2)
  double p_mode1 = 0;       ///< (n+1)/(n-3), threshold for the mode-1 solver
  double p_joseph_lundgren = 0;  ///< stability bound, +infinity for n <= 10
  double lambda2 = 0;   ///< slower decay rate of the mode-0 linearization
  bool lambda2_defined = false;  ///< false when the decay rates are complex
};

enum class Regime {
  mode1_ok,              ///< p > (n+1)/(n-3): all modes solvable
  symmetric_required,    ///< mode-1 solver unavailable, symmetric sources only
  above_joseph_lundgren  ///< p >= p_JL: stable-regime variant
};

/// Eigenvalue k*(n-2+k) of the spherical Laplacian on degree-k harmonics.
double mode_eigenvalue(int n, int k);

/// Computes all derived exponents.  Throws std::invalid_argument for n < 4,
/// for p at or below the critical power (n+2)/(n-2), and for a sigma
/// override outside (0, n-2).
Exponents derive_exponents(int n, double p,
                           std::optional<double> sigma_override = std::nullopt);

Regime classify_regime(const Exponents& e);

}  // namespace emdenlab
