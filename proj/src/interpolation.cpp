#include "emdenlab/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace emdenlab {

double interp_uniform(const Eigen::ArrayXd& f, double x0, double h, double x) {
  const Eigen::Index n = f.size();
  if (n < 6) throw std::invalid_argument("interpolation needs at least 6 samples");
  const double t = (x - x0) / h;
  if (t < -1e-9 || t > double(n - 1) + 1e-9)
    throw std::invalid_argument("interpolation query outside the sampled range");

  Eigen::Index i0 = static_cast<Eigen::Index>(std::floor(t)) - 2;
  i0 = std::clamp<Eigen::Index>(i0, 0, n - 6);

  // Lagrange basis over the 6-point stencil, in units of h.
  double result = 0.0;
  for (int j = 0; j < 6; ++j) {
    double w = 1.0;
    for (int l = 0; l < 6; ++l) {
      if (l == j) continue;
      w *= (t - double(i0 + l)) / double(j - l);
    }
    result += w * f[i0 + j];
  }
  return result;
}

}  // namespace emdenlab
