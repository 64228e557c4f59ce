#include "emdenlab/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "emdenlab/interpolation.hpp"

namespace emdenlab {

CumulativeIntegrals cumulative_integrals(const Grid& g, const Eigen::ArrayXd& samples,
                                         double weight_power, double head_exponent) {
  const Eigen::Index n = g.count;
  if (samples.size() != n)
    throw std::invalid_argument("cumulative_integrals: sample count does not match the grid");
  const double h = g.step;

  // Integrand in s: f(e^s) e^{(w+1)s}.
  const Eigen::ArrayXd f = samples * ((weight_power + 1.0) * g.s).exp();

  // One cubic Newton-Cotes quadrature value per interval.
  Eigen::ArrayXd q(n - 1);
  q[0] = h * (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3]) / 24.0;
  for (Eigen::Index j = 1; j + 2 < n; ++j)
    q[j] = h * (-f[j - 1] + 13.0 * f[j] + 13.0 * f[j + 1] - f[j + 2]) / 24.0;
  q[n - 2] = h * (f[n - 4] - 5.0 * f[n - 3] + 19.0 * f[n - 2] + 9.0 * f[n - 1]) / 24.0;

  CumulativeIntegrals out;
  const double a = head_exponent + weight_power;
  if (a > -1.0) {
    out.head_integrable = true;
    out.head_term = samples[0] * std::pow(g.r[0], weight_power + 1.0) / (a + 1.0);
  } else {
    out.head_integrable = false;
    out.head_term = 0.0;
  }

  out.from_left.resize(n);
  out.from_left[0] = out.head_term;
  for (Eigen::Index i = 1; i < n; ++i) out.from_left[i] = out.from_left[i - 1] + q[i - 1];

  out.from_right.resize(n);
  out.from_right[n - 1] = 0.0;
  for (Eigen::Index i = n - 2; i >= 0; --i) out.from_right[i] = out.from_right[i + 1] + q[i];

  return out;
}

double interp_at(const Grid& g, const Eigen::ArrayXd& samples, double s) {
  return interp_uniform(samples, g.s_min, g.step, s);
}

}  // namespace emdenlab
