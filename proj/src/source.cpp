#include "emdenlab/source.hpp"

#include <cmath>
#include <stdexcept>

namespace emdenlab {

namespace {

double bump(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
double bump_derivative(double t) {
  return t > 0.0 ? std::exp(-1.0 / t) / (t * t) : 0.0;
}

void validate(const SourceSpec& spec) {
  if (spec.k < 0) throw std::invalid_argument("source mode index must be nonnegative");
  if (!(spec.r1 >= 0)) throw std::invalid_argument("source ramp radius must be nonnegative");
  if (!std::isfinite(spec.mu) || !std::isfinite(spec.amplitude))
    throw std::invalid_argument("source parameters must be finite");
}

}  // namespace

double ramp(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = bump(t);
  const double b = bump(1.0 - t);
  return a / (a + b);
}

double ramp_derivative(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  const double a = bump(t);
  const double b = bump(1.0 - t);
  const double d = a + b;
  return (bump_derivative(t) * b + a * bump_derivative(1.0 - t)) / (d * d);
}

RadialProfile source_profile(const GridPtr& g, const SourceSpec& spec) {
  return rescaled_source_profile(g, spec, 1.0, 0.0);
}

RadialProfile rescaled_source_profile(const GridPtr& g, const SourceSpec& spec, double lambda,
                                      double m) {
  if (!g) throw std::invalid_argument("rescaled_source_profile: null grid");
  if (!(lambda > 0)) throw std::invalid_argument("rescaled_source_profile: lambda must be positive");
  validate(spec);
  const Grid& grid = *g;
  const double amp = spec.amplitude * std::pow(lambda, -(2.0 + m));
  Eigen::ArrayXd values(grid.count), derivative(grid.count);
  for (Eigen::Index i = 0; i < grid.count; ++i) {
    const double x = grid.r[i] / lambda;
    const double t = spec.r1 > 0 ? (x - spec.r1) / spec.r1 : 1.0;
    const double dt = spec.r1 > 0 ? 1.0 / (spec.r1 * lambda) : 0.0;
    const double power = std::pow(x, -spec.mu);
    values[i] = amp * ramp(t) * power;
    derivative[i] =
        amp * (ramp_derivative(t) * dt * power - spec.mu * ramp(t) * power / (x * lambda));
  }
  const double head = spec.r1 > 0 ? 0.0 : -spec.mu;
  return make_profile(g, std::move(values), std::move(derivative), head, -spec.mu);
}

ModeExpansion build_source(const GridPtr& g, const std::vector<SourceSpec>& specs) {
  if (!g) throw std::invalid_argument("build_source: null grid");
  ModeExpansion out;
  out.grid = g;
  for (const SourceSpec& spec : specs) {
    RadialProfile p = source_profile(g, spec);
    auto it = out.modes.find(spec.k);
    if (it == out.modes.end())
      out.modes.emplace(spec.k, std::move(p));
    else
      it->second = axpy(it->second, 1.0, p);
  }
  return out;
}

}  // namespace emdenlab
