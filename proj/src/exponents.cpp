#include "emdenlab/exponents.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace emdenlab {

double mode_eigenvalue(int n, int k) {
  if (k < 0) throw std::invalid_argument("mode index k must be >= 0");
  return static_cast<double>(k) * (n - 2 + k);
}

Exponents derive_exponents(int n, double p, std::optional<double> sigma_override) {
  if (n < 4)
    throw std::invalid_argument("dimension n must be >= 4, got " + std::to_string(n));
  const double p_serrin = double(n + 2) / (n - 2);
  if (!(p > p_serrin))
    throw std::invalid_argument("subcritical/critical regime unsupported: need p > (n+2)/(n-2) = " +
                                std::to_string(p_serrin));

  Exponents e;
  e.n = n;
  e.p = p;
  e.m = 2.0 / (p - 1.0);
  e.alpha = n - 2.0 - 4.0 / (p - 1.0);
  e.beta = e.m * (n - 2.0 - e.m);
  e.L = std::pow(e.beta, 1.0 / (p - 1.0));
  e.p_serrin = p_serrin;
  e.p_mode1 = double(n + 1) / (n - 3);

  if (n <= 10) {
    e.p_joseph_lundgren = std::numeric_limits<double>::infinity();
  } else {
    const double nm2 = n - 2.0;
    e.p_joseph_lundgren =
        (nm2 * nm2 - 4.0 * n + 4.0 * std::sqrt(double(n) * n - nm2 * nm2)) /
        (nm2 * (n - 10.0));
  }

  const double disc = e.alpha * e.alpha - 8.0 * (n - 2.0 - e.m);
  if (disc >= 0.0) {
    e.lambda2 = 0.5 * (e.alpha + std::sqrt(disc));
    e.lambda2_defined = true;
  } else {
    e.lambda2 = std::numeric_limits<double>::quiet_NaN();
    e.lambda2_defined = false;
  }

  e.sigma = e.m;
  if (sigma_override) {
    if (!(*sigma_override > 0.0 && *sigma_override < n - 2.0))
      throw std::invalid_argument("sigma override must lie in (0, n-2)");
    e.sigma = *sigma_override;
  }
  return e;
}

Regime classify_regime(const Exponents& e) {
  if (e.p >= e.p_joseph_lundgren) return Regime::above_joseph_lundgren;
  if (e.p > e.p_mode1) return Regime::mode1_ok;
  return Regime::symmetric_required;
}

}  // namespace emdenlab
