#pragma once

#include <cstdint>
#include <vector>

#include "hilbert/kernels.hpp"
#include "hilbert/polytope.hpp"

namespace hilbert {

/// A linear functional on R^n, as coordinates in the dual space.
using DualVector = Vec;

/// The log-gradient map into the dual space:
///   Phi_b(x) = sum_i log(L_i(x)) * grad_i.
/// Smooth on the interior, blows up toward the boundary, and distorts the
/// projective distance by at most a fixed factor in both directions.
DualVector bernig_map(const HRep& h, const Vec& x);

/// Solve Phi_b(x) = w by damped Newton steps. Phi_b is the gradient of the
/// convex potential sum_i (L_i log L_i - L_i), so the Jacobian
/// sum_i grad_i grad_i^T / L_i is positive definite and Newton converges
/// from any interior start. Used as a local-surjectivity spot check.
Vec bernig_inverse(const HRep& h, const DualVector& w, const Vec& start, double tol = 1e-10,
                   int max_iter = 200);

/// Ratio band observed over one boundary-depth stratum.
struct DepthBand {
  double depth = 0.0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  long samples = 0;

  double width() const { return max_ratio / min_ratio; }
};

struct WitnessPair {
  Vec x, y;
  double ratio = 0.0;
};

/// Empirical distortion of bernig_map: extremes of
/// |Phi_b(x)-Phi_b(y)| / d(x,y) over sampled pairs, stratified by boundary
/// depth (min_i L_i). Pairs with d < 1e-6 are not counted.
struct DistortionReport {
  long sample_count = 0;  // counted pairs
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  WitnessPair min_witness, max_witness;
  std::vector<DepthBand> per_depth;  // shallow to deep

  /// Bands do not widen by more than `slack` when the sampling depth
  /// increases by two decades.
  bool stable(double slack = 0.10) const;
};

struct SamplerConfig {
  long pairs = 2000;
  std::uint64_t seed = 1;
  std::vector<double> depths = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  Exec exec = Exec::parallel;
};

DistortionReport distortion_report(const HRep& h, const SamplerConfig& cfg);

/// Empirical Finsler comparison of two convex bodies over a shared simplex
/// neighborhood: extremes of F_A(x, v) / F_B(x, v) for x in the simplex
/// (stratified toward the face the simplex shares with both boundaries)
/// and v swept over a fixed direction set.
struct ComparisonBand {
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  std::vector<DepthBand> per_depth;
};

struct ComparisonConfig {
  long points_per_depth = 100;
  int directions = 360;
  std::uint64_t seed = 1;
  std::vector<double> depths = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  Exec exec = Exec::parallel;
};

ComparisonBand finsler_comparison(const HRep& a, const HRep& b, const VRep& shared_simplex,
                                  const ComparisonConfig& cfg);

}  // namespace hilbert
