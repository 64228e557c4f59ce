#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace emdenlab {

/// Thrown when an integration cannot reach its target (step underflow,
/// step budget exhausted, or a guard rejects the trajectory).
struct IntegrationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OdeOptions {
  double rel_tol = 1e-12;
  double abs_tol = 0;  ///< pure relative control by default; safe for tiny seeds
  double max_step = 0.25;
  long max_steps = 20000000;
};

namespace detail {
inline void ode_no_guard(double, const Eigen::Vector2d&) {}
}  // namespace detail

// Dormand-Prince 5(4) with adaptive steps, clamped so every requested output
// time is hit exactly. `nodes` must move monotonically away from t0 (the first
// node may equal t0). The two state components at each node are written to
// out_y0 and out_y1. `guard` is invoked after every accepted step and may
// throw to abort a run that has left the region of interest.
template <class Rhs, class Guard>
void integrate_nodes(Rhs&& rhs, double t0, Eigen::Vector2d y, const Eigen::ArrayXd& nodes,
                     Eigen::ArrayXd& out_y0, Eigen::ArrayXd& out_y1, const OdeOptions& opt,
                     Guard&& guard) {
  const Eigen::Index n = nodes.size();
  out_y0.resize(n);
  out_y1.resize(n);
  if (n == 0) return;

  const double dir = (nodes[n - 1] >= t0) ? 1.0 : -1.0;
  if ((nodes[0] - t0) * dir < 0.0)
    throw std::invalid_argument("integrate_nodes: first node lies behind the start time");
  for (Eigen::Index i = 1; i < n; ++i)
    if ((nodes[i] - nodes[i - 1]) * dir < 0.0)
      throw std::invalid_argument("integrate_nodes: nodes are not monotone");

  Eigen::Vector2d k1, k2, k3, k4, k5, k6, k7, yt, ynew, yerr;
  double t = t0;
  rhs(t, y, k1);
  guard(t, y);

  const double span = std::abs(nodes[n - 1] - t0);
  double h = dir * std::min(opt.max_step, std::max(span / 1024.0, 1e-6));
  long steps = 0;

  for (Eigen::Index i = 0; i < n; ++i) {
    while ((nodes[i] - t) * dir > 0.0) {
      if (++steps > opt.max_steps) throw IntegrationError("integrate_nodes: step budget exhausted");
      for (;;) {
        double ht = h;
        bool hit = false;
        const double rem = nodes[i] - t;
        if ((ht - rem) * dir >= 0.0) {
          ht = rem;
          hit = true;
        }

        yt = y + ht * (1.0 / 5.0) * k1;
        rhs(t + ht / 5.0, yt, k2);
        yt = y + ht * ((3.0 / 40.0) * k1 + (9.0 / 40.0) * k2);
        rhs(t + ht * 3.0 / 10.0, yt, k3);
        yt = y + ht * ((44.0 / 45.0) * k1 - (56.0 / 15.0) * k2 + (32.0 / 9.0) * k3);
        rhs(t + ht * 4.0 / 5.0, yt, k4);
        yt = y + ht * ((19372.0 / 6561.0) * k1 - (25360.0 / 2187.0) * k2 +
                       (64448.0 / 6561.0) * k3 - (212.0 / 729.0) * k4);
        rhs(t + ht * 8.0 / 9.0, yt, k5);
        yt = y + ht * ((9017.0 / 3168.0) * k1 - (355.0 / 33.0) * k2 + (46732.0 / 5247.0) * k3 +
                       (49.0 / 176.0) * k4 - (5103.0 / 18656.0) * k5);
        rhs(t + ht, yt, k6);
        ynew = y + ht * ((35.0 / 384.0) * k1 + (500.0 / 1113.0) * k3 + (125.0 / 192.0) * k4 -
                         (2187.0 / 6784.0) * k5 + (11.0 / 84.0) * k6);
        rhs(t + ht, ynew, k7);
        yerr = ht * ((71.0 / 57600.0) * k1 - (71.0 / 16695.0) * k3 + (71.0 / 1920.0) * k4 -
                     (17253.0 / 339200.0) * k5 + (22.0 / 525.0) * k6 - (1.0 / 40.0) * k7);

        double err = 0.0;
        for (int c = 0; c < 2; ++c) {
          const double sc = std::max(
              opt.abs_tol + opt.rel_tol * std::max(std::abs(y[c]), std::abs(ynew[c])), 1e-300);
          const double e = yerr[c] / sc;
          err += e * e;
        }
        err = std::sqrt(0.5 * err);

        if (std::isfinite(err) && err <= 1.0) {
          t = hit ? nodes[i] : t + ht;
          y = ynew;
          k1 = k7;
          guard(t, y);
          double fac = std::isfinite(err) && err > 0.0
                           ? std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0)
                           : 5.0;
          h = std::clamp(std::abs(ht * fac), 0.0, opt.max_step) * dir;
          break;
        }
        const double fac = std::isfinite(err) ? std::max(0.9 * std::pow(err, -0.2), 0.2) : 0.2;
        h = ht * fac;
        if (std::abs(h) < 1e-15 * std::max(1.0, std::abs(t)))
          throw IntegrationError("integrate_nodes: step size underflow");
      }
    }
    out_y0[i] = y[0];
    out_y1[i] = y[1];
  }
}

template <class Rhs>
void integrate_nodes(Rhs&& rhs, double t0, const Eigen::Vector2d& y0, const Eigen::ArrayXd& nodes,
                     Eigen::ArrayXd& out_y0, Eigen::ArrayXd& out_y1,
                     const OdeOptions& opt = OdeOptions{}) {
  integrate_nodes(static_cast<Rhs&&>(rhs), t0, y0, nodes, out_y0, out_y1, opt,
                  detail::ode_no_guard);
}

}  // namespace emdenlab
