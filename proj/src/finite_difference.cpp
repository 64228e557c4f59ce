#include "emdenlab/finite_difference.hpp"

#include <stdexcept>
#include <vector>

namespace emdenlab {

Eigen::ArrayXd fd_weights(const Eigen::ArrayXd& offsets, int deriv_order, double x0) {
  const int nn = int(offsets.size());
  if (deriv_order < 0 || deriv_order >= nn)
    throw std::invalid_argument("fd_weights: derivative order out of range");
  // Fornberg recursion; c(j, k) = weight of node j for the k-th derivative.
  Eigen::ArrayXXd c = Eigen::ArrayXXd::Zero(nn, deriv_order + 1);
  c(0, 0) = 1.0;
  double c1 = 1.0;
  for (int i = 1; i < nn; ++i) {
    double c2 = 1.0;
    const double xi = offsets[i] - x0;
    const int mmax = std::min(i, deriv_order);
    for (int j = 0; j < i; ++j) {
      const double c3 = offsets[i] - offsets[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mmax; k >= 1; --k)
          c(i, k) = c1 * (k * c(i - 1, k - 1) - (offsets[i - 1] - x0) * c(i - 1, k)) / c2;
        c(i, 0) = -c1 * (offsets[i - 1] - x0) * c(i - 1, 0) / c2;
      }
      for (int k = mmax; k >= 1; --k)
        c(j, k) = (xi * c(j, k) - k * c(j, k - 1)) / c3;
      c(j, 0) = xi * c(j, 0) / c3;
    }
    c1 = c2;
  }
  return c.col(deriv_order);
}

namespace {

struct EdgeStencils {
  // Weights for the first two and last two nodes, 6-point stencils.
  Eigen::ArrayXd w0, w1, wm2, wm1;
};

EdgeStencils edge_stencils(int order) {
  Eigen::ArrayXd fwd(6);
  for (int i = 0; i < 6; ++i) fwd[i] = i;
  EdgeStencils e;
  e.w0 = fd_weights(fwd, order, 0.0);
  e.w1 = fd_weights(fwd, order, 1.0);
  // Mirror for the right edge: offsets -5..0 evaluated at -1 and 0.
  Eigen::ArrayXd bwd(6);
  for (int i = 0; i < 6; ++i) bwd[i] = i - 5;
  e.wm2 = fd_weights(bwd, order, -1.0);
  e.wm1 = fd_weights(bwd, order, 0.0);
  return e;
}

}  // namespace

Eigen::ArrayXd differentiate(const Eigen::ArrayXd& f, double h, int order) {
  if (order != 1 && order != 2)
    throw std::invalid_argument("differentiate supports orders 1 and 2");
  const Eigen::Index n = f.size();
  if (n < 6) throw std::invalid_argument("differentiate needs at least 6 samples");

  Eigen::ArrayXd d(n);
  const double inv = order == 1 ? 1.0 / (12.0 * h) : 1.0 / (12.0 * h * h);
  if (order == 1) {
    for (Eigen::Index i = 2; i + 2 < n; ++i)
      d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) * inv;
  } else {
    for (Eigen::Index i = 2; i + 2 < n; ++i)
      d[i] = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) * inv;
  }

  static const EdgeStencils e1 = edge_stencils(1);
  static const EdgeStencils e2 = edge_stencils(2);
  const EdgeStencils& e = order == 1 ? e1 : e2;
  const double hp = order == 1 ? h : h * h;
  auto dot_head = [&](const Eigen::ArrayXd& w) {
    double acc = 0;
    for (int i = 0; i < 6; ++i) acc += w[i] * f[i];
    return acc / hp;
  };
  auto dot_tail = [&](const Eigen::ArrayXd& w) {
    double acc = 0;
    for (int i = 0; i < 6; ++i) acc += w[i] * f[n - 6 + i];
    return acc / hp;
  };
  d[0] = dot_head(e.w0);
  d[1] = dot_head(e.w1);
  d[n - 2] = dot_tail(e.wm2);
  d[n - 1] = dot_tail(e.wm1);
  return d;
}

}  // namespace emdenlab
