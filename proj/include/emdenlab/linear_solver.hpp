#pragma once

#include <map>

#include "emdenlab/exponents.hpp"
#include "emdenlab/grid.hpp"
#include "emdenlab/ground_state.hpp"
#include "emdenlab/norms.hpp"

namespace emdenlab {

/// Fundamental pair for the homogeneous mode equation
///   z'' + (n-1)/r z' + (p w^{p-1} - lambda_k / r^2) z = 0,
/// normalized so r^{n-1} (grow dec' - grow' dec) = -1.
struct HomogeneousPair {
  int k = 0;
  RadialProfile grow;  ///< regular at the origin: z ~ r^k
  RadialProfile dec;   ///< singular at the origin; recessive at infinity for k >= 2
  double wronskian_drift = 0;  ///< max deviation of the scaled Wronskian from -1
};

/// Builds the pair for mode k (k = 0 or k >= 2; mode 1 is handled through its
/// explicit kernel and has no pair).
HomogeneousPair homogeneous_pair(const GroundState& gs, int k);

/// Solves L_k(phi) = h by variation of parameters with the tail selection
/// that keeps phi in the weighted space: the singular branch carries the
/// integral from the origin, the regular branch the integral anchored at
/// r = 1 (k = 0) or at infinity (k >= 2).
RadialProfile solve_mode(const GroundState& gs, const HomogeneousPair& pair,
                         const RadialProfile& h);

/// Mode-1 solve by reduction of order through the translation kernel -w'.
/// Requires p > (n+1)/(n-3).
RadialProfile solve_mode1(const GroundState& gs, const RadialProfile& h);

/// Right inverse of the linearized operator, mode by mode, with cached
/// fundamental pairs.
class RightInverse {
 public:
  explicit RightInverse(GroundState gs);

  const GroundState& ground_state() const { return gs_; }

  /// phi with L_k(phi_k) = h_k for every mode present in h.
  ModeExpansion apply(const ModeExpansion& h);

  RadialProfile apply_mode(int k, const RadialProfile& h);

  const HomogeneousPair& pair(int k);

 private:
  GroundState gs_;
  std::map<int, HomogeneousPair> pairs_;
};

}  // namespace emdenlab
