#include "emdenlab/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "emdenlab/interpolation.hpp"

namespace emdenlab {

GridPtr build_grid(double s_min, double s_max, Eigen::Index count) {
  if (!(s_min < s_max))
    throw std::invalid_argument("grid requires s_min < s_max");
  if (count < 64)
    throw std::invalid_argument("grid requires at least 64 nodes, got " +
                                std::to_string(count));
  auto g = std::make_shared<Grid>();
  g->s_min = s_min;
  g->s_max = s_max;
  g->count = count;
  g->step = (s_max - s_min) / double(count - 1);
  g->s = Eigen::ArrayXd::LinSpaced(count, s_min, s_max);
  g->r = g->s.exp();
  return g;
}

GridPtr refine_grid(const Grid& g) {
  return build_grid(g.s_min, g.s_max, 2 * g.count - 1);
}

bool compatible(const Grid& a, const Grid& b) {
  if (a.count != b.count) return false;
  const double scale = std::max(std::abs(a.s_min), std::abs(a.s_max));
  return std::abs(a.s_min - b.s_min) <= 1e-14 * scale &&
         std::abs(a.s_max - b.s_max) <= 1e-14 * scale;
}

RadialProfile make_profile(GridPtr g, Eigen::ArrayXd values, Eigen::ArrayXd derivative,
                           double head_exponent, double tail_exponent) {
  if (!g) throw std::invalid_argument("profile requires a grid");
  if (values.size() != g->count || derivative.size() != g->count)
    throw std::invalid_argument("profile sample count does not match the grid");
  if (!values.allFinite() || !derivative.allFinite())
    throw std::invalid_argument("profile contains non-finite samples");
  RadialProfile f;
  f.grid = std::move(g);
  f.values = std::move(values);
  f.derivative = std::move(derivative);
  f.head_exponent = head_exponent;
  f.tail_exponent = tail_exponent;
  return f;
}

RadialProfile multiply(const RadialProfile& a, const RadialProfile& b) {
  if (!compatible(*a.grid, *b.grid))
    throw std::invalid_argument("profile grids do not match");
  RadialProfile f;
  f.grid = a.grid;
  f.values = a.values * b.values;
  f.derivative = a.derivative * b.values + a.values * b.derivative;
  f.head_exponent = a.head_exponent + b.head_exponent;
  f.tail_exponent = a.tail_exponent + b.tail_exponent;
  return f;
}

RadialProfile axpy(const RadialProfile& a, double c, const RadialProfile& b) {
  if (!compatible(*a.grid, *b.grid))
    throw std::invalid_argument("profile grids do not match");
  RadialProfile f;
  f.grid = a.grid;
  f.values = a.values + c * b.values;
  f.derivative = a.derivative + c * b.derivative;
  f.head_exponent = std::min(a.head_exponent, b.head_exponent);
  f.tail_exponent = std::max(a.tail_exponent, b.tail_exponent);
  return f;
}

double eval_values(const RadialProfile& f, double r) {
  if (!(r > 0)) throw std::invalid_argument("radius must be positive");
  const Grid& g = *f.grid;
  const double s = std::log(r);
  if (s < g.s_min)
    return f.values[0] * std::pow(r / g.r[0], f.head_exponent);
  if (s > g.s_max)
    return f.values[g.count - 1] * std::pow(r / g.r[g.count - 1], f.tail_exponent);
  return interp_uniform(f.values, g.s_min, g.step, s);
}

double eval_derivative(const RadialProfile& f, double r) {
  if (!(r > 0)) throw std::invalid_argument("radius must be positive");
  const Grid& g = *f.grid;
  const double s = std::log(r);
  if (s < g.s_min) {
    const double a = f.head_exponent == 0.0 ? 1.0 : f.head_exponent - 1.0;
    return f.derivative[0] * std::pow(r / g.r[0], a);
  }
  if (s > g.s_max) {
    const double a = f.tail_exponent == 0.0 ? 1.0 : f.tail_exponent - 1.0;
    return f.derivative[g.count - 1] * std::pow(r / g.r[g.count - 1], a);
  }
  return interp_uniform(f.derivative, g.s_min, g.step, s);
}

RadialProfile scale_profile(const RadialProfile& f, double lambda, double power) {
  if (!(lambda > 0)) throw std::invalid_argument("scale factor must be positive");
  const Grid& g = *f.grid;
  Eigen::ArrayXd values(g.count), derivative(g.count);
  const double amp = std::pow(lambda, power);
  for (Eigen::Index i = 0; i < g.count; ++i) {
    const double arg = g.r[i] / lambda;
    values[i] = amp * eval_values(f, arg);
    derivative[i] = amp / lambda * eval_derivative(f, arg);
  }
  RadialProfile out;
  out.grid = f.grid;
  out.values = std::move(values);
  out.derivative = std::move(derivative);
  out.head_exponent = f.head_exponent;
  out.tail_exponent = f.tail_exponent;
  return out;
}

}  // namespace emdenlab
