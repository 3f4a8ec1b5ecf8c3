#pragma once

#include <vector>

#include "hilbert/polytope.hpp"

namespace hilbert {

/// Projective distance between interior points via the cross-ratio of the
/// chord through them: d = 1/2 log( (|q-a|/|p-a|) * (|p-b|/|q-b|) ).
/// Evaluated in log space so near-boundary chords do not overflow.
double distance_crossratio(const HRep& h, const Vec& p, const Vec& q);

/// Same distance from facet functionals only:
///   d = 1/2 * (max_i r_i - min_i r_i),  r_i = log(L_i(p) / L_i(q)).
/// The range of log-ratios equals the pairwise sup form but costs O(N).
double distance_birkhoff(const HRep& h, const Vec& p, const Vec& q);

/// Range form of the distance from precomputed functional values. Values
/// must be strictly positive; used by kernels that track facet values
/// directly (stable much closer to the boundary than Cartesian points).
double distance_from_values(const Vec& values_p, const Vec& values_q);

/// Infinitesimal (Finsler) norm at p:
///   F(p, v) = 1/2 |v| (1/|p-p^-| + 1/|p-p^+|),  F(p, 0) = 0,
/// with p^{+-} the boundary points of the chord through p directed by v.
double finsler_norm(const HRep& h, const Vec& p, const Vec& v);

/// Range form of the Finsler norm from precomputed per-facet data:
///   F = 1/2 (max_i s_i - min_i s_i),  s_i = <g_i, v> / L_i(p).
/// Agrees with the chord form; used by kernels that sweep many directions.
double finsler_from_values(const Vec& slopes, const Vec& values);

/// A planar sector bounded by two lines through a common apex, as the
/// intersection {L1 > 0, L2 > 0} of two halfplanes (2-D only).
class ConeSector {
public:
  static ConeSector make(const AffineFunctional& l1, const AffineFunctional& l2);

  const AffineFunctional& l1() const { return l1_; }
  const AffineFunctional& l2() const { return l2_; }
  const Vec& apex() const { return apex_; }
  bool contains(const Vec& x) const {
    return l1_.value(x) > kGeomTol && l2_.value(x) > kGeomTol;
  }

private:
  ConeSector() = default;
  AffineFunctional l1_, l2_;
  Vec apex_;
};

/// Sector (cone) metric:
///   delta(x, y) = 1/2 | log | (L1(x)/L1(y)) * (L2(y)/L2(x)) | |.
/// Vanishes exactly when x, y and the apex are collinear.
double cone_metric(const ConeSector& s, const Vec& x, const Vec& y);

/// Vertex indices of a convex polygon in cyclic (counterclockwise) order.
std::vector<int> polygon_cyclic_order(const VRep& polygon);

/// Interior-angle sector at every polygon vertex, in cyclic vertex order.
/// The sector at a vertex is cut by the two incident edge lines and
/// contains the whole polygon.
std::vector<ConeSector> vertex_sectors(const VRep& polygon);

/// Polygon distance as half the sum of all vertex-sector metrics.
double distance_alexander(const VRep& polygon, const Vec& x, const Vec& y);

/// One-sided variant: the plain sum over vertices strictly on one side of
/// the line (xy). Equals distance_alexander; vertices on the line
/// contribute zero and are skipped.
double distance_alexander_one_sided(const VRep& polygon, const Vec& x, const Vec& y);

}  // namespace hilbert
