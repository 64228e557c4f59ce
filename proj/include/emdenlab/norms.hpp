#pragma once

#include <map>

#include "emdenlab/exponents.hpp"
#include "emdenlab/grid.hpp"

namespace emdenlab {

/// Spherical-harmonic mode decomposition of a radial-by-mode function:
/// u(x) = sum_k u_k(r) Y_k. Only the modes present in the map are carried.
struct ModeExpansion {
  GridPtr grid;
  std::map<int, RadialProfile> modes;
};

/// Sum over modes of |values| at each node.
Eigen::ArrayXd mode_abs_sum(const ModeExpansion& x);

/// Inner (r <= 1) and outer (r >= 1) parts of a weighted sup norm. Empty
/// halves contribute zero; the node at r = 1, if present, counts for both.
struct WeightedSupSplit {
  double inner = 0;
  double outer = 0;
  double total() const { return inner + outer; }
};

/// sup r^{inner_weight} f over nodes r <= 1 and sup r^{outer_weight} f over
/// nodes r >= 1, for nonnegative node samples f.
WeightedSupSplit weighted_sup_split(const Grid& g, const Eigen::ArrayXd& samples,
                                    double inner_weight, double outer_weight);

/// Solution norm: sup_{r<=1} r^sigma sum_k |u_k| + sup_{r>=1} r^m sum_k |u_k|.
WeightedSupSplit solution_norm_split(const ModeExpansion& x, const Exponents& e);
double solution_norm(const ModeExpansion& x, const Exponents& e);

/// Source norm: the same with weights sigma + 2 and m + 2.
WeightedSupSplit source_norm_split(const ModeExpansion& x, const Exponents& e);
double source_norm(const ModeExpansion& x, const Exponents& e);

}  // namespace emdenlab
