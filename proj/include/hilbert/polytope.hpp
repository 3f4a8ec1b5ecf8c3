#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hilbert/errors.hpp"

namespace hilbert {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Geometric tolerance on functional values for boundary/membership
/// predicates. Functionals are normalized to unit gradient at HRep
/// construction, so this is scale-meaningful.
constexpr double kGeomTol = 1e-9;

/// Pivoting tolerance for rank decisions (affine independence, nullspaces).
constexpr double kRankTol = 1e-10;

/// Tolerance for classifying a functional as active (vanishing) at a vertex.
constexpr double kActiveTol = 1e-7;

/// An affine map x -> <gradient, x> + offset. Positive on the interior of
/// the polytope it bounds.
struct AffineFunctional {
  Vec gradient;
  double offset = 0.0;

  double value(const Vec& x) const { return gradient.dot(x) + offset; }

  /// Same zero set and sign, unit gradient.
  AffineFunctional normalized() const {
    const double n = gradient.norm();
    if (n < kRankTol) throw DegenerateInput("affine functional has zero gradient");
    return {gradient / n, offset / n};
  }
};

/// Halfspace representation of a bounded convex polytope with non-empty
/// interior: {x : L_i(x) > 0 for all i}. Construction normalizes gradients,
/// removes duplicate facets, verifies boundedness and a strictly interior
/// witness point. Immutable afterwards.
class HRep {
public:
  static HRep make(int dim, std::vector<AffineFunctional> functionals);

  int dim() const { return dim_; }
  int facet_count() const { return static_cast<int>(funcs_.size()); }
  const std::vector<AffineFunctional>& functionals() const { return funcs_; }
  const Vec& witness() const { return witness_; }

  /// Gradient rows stacked (facet_count x dim) and offsets; values(x) = G x + c.
  const Mat& gradients() const { return grad_; }
  const Vec& offsets() const { return off_; }

  Vec values(const Vec& x) const { return grad_ * x + off_; }
  double min_value(const Vec& x) const { return values(x).minCoeff(); }
  bool is_interior(const Vec& x) const { return min_value(x) > kGeomTol; }

  /// Throws PointOutside unless x is strictly interior (margin kGeomTol).
  /// Near-boundary inputs are rejected rather than fed into logarithms.
  void require_interior(const Vec& x, const char* label) const;

private:
  HRep() = default;
  int dim_ = 0;
  std::vector<AffineFunctional> funcs_;
  Mat grad_;
  Vec off_;
  Vec witness_;
};

/// Vertex representation: the convex hull of extremal points affinely
/// spanning R^n. Construction validates spanning and extremality.
class VRep {
public:
  static VRep make(int dim, std::vector<Vec> vertices);

  int dim() const { return dim_; }
  int vertex_count() const { return static_cast<int>(verts_.size()); }
  const std::vector<Vec>& vertices() const { return verts_; }
  Vec centroid() const;

private:
  VRep() = default;
  int dim_ = 0;
  std::vector<Vec> verts_;
};

/// The maximal open segment of a line inside the polytope, through base
/// point `origin` with unit direction `unit_dir`:
///   a = origin - t_minus * unit_dir,  b = origin + t_plus * unit_dir
/// are the two boundary points; walking order along the line is a, origin, b.
struct Chord {
  Vec a;
  Vec b;
  double t_minus = 0.0;
  double t_plus = 0.0;
  Vec origin;
  Vec unit_dir;
  int minus_facet = -1;  // facet index attaining t_minus
  int plus_facet = -1;   // facet index attaining t_plus
};

/// One face of the lattice, stored by its closed vertex set. The interior
/// of a face is relatively open in the affine span of those vertices.
struct Face {
  int dim = 0;
  std::vector<int> vertex_ids;     // indices into the vertex list
  std::vector<int> active_facets;  // functionals vanishing on the face
};

/// Complete face lattice (desk scale, dim <= 4). Faces of every dimension
/// 0..n; the polytope itself is the single n-face; no empty face.
class FaceLattice {
public:
  FaceLattice(std::vector<Vec> vertices, std::vector<Face> faces);

  const std::vector<Vec>& vertices() const { return verts_; }
  const std::vector<Face>& faces() const { return faces_; }

  /// Number of k-faces for k = 0..n.
  std::vector<int> f_vector(int dim) const;

private:
  std::vector<Vec> verts_;
  std::vector<Face> faces_;  // sorted by dimension
};

/// Facet description of the convex hull of a VRep. Brute force over
/// n-subsets of vertices, O(C(V,n) n^3); fine at desk scale (V <= ~16).
HRep hrep_from_vrep(const VRep& v);

/// Vertex enumeration by brute force over n-subsets of functionals,
/// O(C(N,n) n^3); fine at desk scale (N <= ~30).
VRep vrep_from_hrep(const HRep& h);

/// Closed-form ray/boundary intersection from a strictly interior point.
/// The direction need not be normalized; chord parameters are reported for
/// the unit direction.
Chord boundary_intersection(const HRep& h, const Vec& p, const Vec& u);

/// Enumerate all faces from active-functional sets of vertices.
FaceLattice face_lattice(const HRep& h);

// Shared linear-algebra helpers.

/// Affine rank of a point set (dimension of its affine hull).
int affine_rank(const std::vector<Vec>& points, double tol = kRankTol);

/// Greedy selection of `count` affinely independent points; returns their
/// indices or throws DegenerateInput.
std::vector<int> affine_basis_indices(const std::vector<Vec>& points, int count,
                                      double tol = kRankTol);

}  // namespace hilbert
