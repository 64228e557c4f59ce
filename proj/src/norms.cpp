#include "emdenlab/norms.hpp"

#include <stdexcept>

namespace emdenlab {

Eigen::ArrayXd mode_abs_sum(const ModeExpansion& x) {
  if (!x.grid) throw std::invalid_argument("mode_abs_sum: null grid");
  Eigen::ArrayXd out = Eigen::ArrayXd::Zero(x.grid->count);
  for (const auto& [k, profile] : x.modes) {
    if (!profile.grid || !compatible(*profile.grid, *x.grid))
      throw std::invalid_argument("mode_abs_sum: mode " + std::to_string(k) +
                                  " lives on an incompatible grid");
    out += profile.values.abs();
  }
  return out;
}

WeightedSupSplit weighted_sup_split(const Grid& g, const Eigen::ArrayXd& samples,
                                    double inner_weight, double outer_weight) {
  if (samples.size() != g.count)
    throw std::invalid_argument("weighted_sup_split: sample count does not match the grid");
  WeightedSupSplit out;
  for (Eigen::Index i = 0; i < g.count; ++i) {
    if (g.s[i] <= 0.0)
      out.inner = std::max(out.inner, std::exp(inner_weight * g.s[i]) * samples[i]);
    if (g.s[i] >= 0.0)
      out.outer = std::max(out.outer, std::exp(outer_weight * g.s[i]) * samples[i]);
  }
  return out;
}

WeightedSupSplit solution_norm_split(const ModeExpansion& x, const Exponents& e) {
  return weighted_sup_split(*x.grid, mode_abs_sum(x), e.sigma, e.m);
}

double solution_norm(const ModeExpansion& x, const Exponents& e) {
  return solution_norm_split(x, e).total();
}

WeightedSupSplit source_norm_split(const ModeExpansion& x, const Exponents& e) {
  return weighted_sup_split(*x.grid, mode_abs_sum(x), e.sigma + 2.0, e.m + 2.0);
}

double source_norm(const ModeExpansion& x, const Exponents& e) {
  return source_norm_split(x, e).total();
}

}  // namespace emdenlab
