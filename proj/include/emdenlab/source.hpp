#pragma once

#include <vector>

#include "emdenlab/grid.hpp"
#include "emdenlab/norms.hpp"

namespace emdenlab {

/// Compactly ramped power-law source on one mode:
///   f(r) = amplitude * ramp((r - r1) / r1) * r^{-mu},
/// so f vanishes for r <= r1 and equals the pure power for r >= 2 r1.
/// r1 = 0 drops the ramp and gives the pure power.
struct SourceSpec {
  int k = 0;
  double mu = 4;
  double r1 = 20;
  double amplitude = 1;
};

/// C-infinity ramp: 0 for t <= 0, 1 for t >= 1, exp(-1/t) smoothstep between.
double ramp(double t);
double ramp_derivative(double t);

/// Samples one source on the grid (head exponent 0, tail exponent -mu).
RadialProfile source_profile(const GridPtr& g, const SourceSpec& spec);

/// The rescaled member f_lambda(r) = lambda^{-(2+m)} f(r / lambda), evaluated
/// in closed form so the small-lambda members carry no resampling error.
RadialProfile rescaled_source_profile(const GridPtr& g, const SourceSpec& spec, double lambda,
                                      double m);

/// Sums the given sources into a mode expansion (entries with the same k add).
ModeExpansion build_source(const GridPtr& g, const std::vector<SourceSpec>& specs);

}  // namespace emdenlab
