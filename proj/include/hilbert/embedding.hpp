#pragma once

#include <vector>

#include "hilbert/polytope.hpp"

namespace hilbert {

/// Strictly positive weights of length n+1 summing to 1: coordinates of an
/// interior simplex point in an affine basis.
class BarycentricPoint {
public:
  static BarycentricPoint make(const Vec& weights);

  const Vec& weights() const { return w_; }
  int count() const { return static_cast<int>(w_.size()); }
  int dim() const { return count() - 1; }

private:
  BarycentricPoint() = default;
  Vec w_;
};

/// Half-range seminorm on R^m descended to the quotient by constant vectors:
///   N(w) = 1/2 (max_i w_i - min_i w_i).
/// Positively homogeneous, vanishes exactly on constants, and carries the
/// 1/2 so the log embeddings below are exact isometries for the projective
/// distance. Vectors are canonically represented with zero mean.
class PolyhedralNorm {
public:
  explicit PolyhedralNorm(int carrier_dim) : m_(carrier_dim) {}

  int carrier_dim() const { return m_; }
  double operator()(const Vec& w) const { return 0.5 * (w.maxCoeff() - w.minCoeff()); }

  static Vec zero_mean(const Vec& w) { return w.array() - w.mean(); }

private:
  int m_ = 0;
};

/// Coordinate form of an affine-plus-logarithm embedding: the map
///   x -> zero_mean( log M_1(x), ..., log M_m(x) )
/// into (R^m / constants, half-range norm), defined on the set where every
/// coordinate functional is positive.
struct LogEmbedding {
  int source_dim = 0;
  int carrier_dim = 0;  // m; the quotient target has dimension m - 1
  std::vector<AffineFunctional> coordinates;
  PolyhedralNorm norm{0};

  Vec apply(const Vec& x) const;
};

/// Log-coordinate embedding of the open simplex: zero-mean class of
/// (log w_1, ..., log w_{n+1}). The half-range of a difference of images is
/// exactly the simplex's projective distance (range form with L_i = w_i).
Vec simplex_embed(const BarycentricPoint& p);

/// Inverse on classes: softmax of any representative (total on R^{n+1},
/// constant shifts cancel).
BarycentricPoint simplex_embed_inverse(const Vec& w);

/// Planar pairwise-ratio coordinates (n = 2 only):
///   (log w1/w2, log w2/w3, log w3/w1), landing in the plane x+y+z = 0.
/// The sup norm of an image difference is twice the distance (every cyclic
/// pair is adjacent), consistent with the half-range convention.
Vec phi2(const BarycentricPoint& p);

/// Inverse of phi2: weights proportional to (e^{x+y}, e^y, 1), normalized
/// to sum 1.
BarycentricPoint phi2_inverse(const Vec& w);

/// Realization of a polytope with N+1 facets as an affine section of an
/// N-simplex: an N-simplex S in R^N plus an injective affine map
/// A : R^n -> R^N with x interior to P iff A(x) interior to S, facet by
/// facet (the k-th simplex facet pulls back to a positive multiple of the
/// facet_order[k]-th polytope functional).
class SimplexSectionLift {
public:
  int source_dim() const { return n_; }
  int target_dim() const { return N_; }
  const HRep& simplex() const { return simplex_; }
  const std::vector<Vec>& basis_points() const { return basis_; }  // n+1 vertices of P
  const std::vector<int>& facet_order() const { return order_; }

  /// Barycentric coordinates of x in the chosen affine basis of R^n.
  Vec source_barycentric(const Vec& x) const;

  /// The affine injection A (barycentric coordinates padded with zeros).
  Vec lift(const Vec& x) const;

  /// Affine coordinates of z in the standard affine basis of R^N, length
  /// N+1; the image of A is exactly { y_{n+2} = ... = y_{N+1} = 0 }.
  Vec target_affine_barycentric(const Vec& z) const;

  /// Inverse of `lift` on its image.
  Vec unlift(const Vec& z, double tol = 1e-9) const;

private:
  SimplexSectionLift(int n, int N, HRep simplex, std::vector<Vec> basis, std::vector<int> order);
  friend SimplexSectionLift simplex_section_lift(const HRep& h);
  int n_;
  int N_;
  HRep simplex_;
  std::vector<Vec> basis_;
  std::vector<int> order_;
  Eigen::PartialPivLU<Mat> bary_lu_;  // [basis points; ones] factorization
};

SimplexSectionLift simplex_section_lift(const HRep& h);

/// Composite isometric embedding of a polytope: lift to the simplex
/// section, then log-embed the simplex. Image vectors are zero-mean in
/// R^{N+1}; the quotient target has dimension N (facet count minus one).
class PolytopeEmbedding {
public:
  explicit PolytopeEmbedding(const HRep& h);

  const HRep& polytope() const { return h_; }
  const SimplexSectionLift& lift() const { return lift_; }
  const PolyhedralNorm& norm() const { return norm_; }
  int target_dim() const { return lift_.target_dim(); }
  int carrier_dim() const { return lift_.target_dim() + 1; }

  /// Barycentric coordinates of A(p) with respect to the simplex vertices.
  BarycentricPoint simplex_barycentric(const Vec& p) const;

  Vec embed(const Vec& p) const;

  /// Whether a target class (any representative) is the image of an
  /// interior point; the image spans the whole quotient only for simplices.
  bool has_preimage(const Vec& w, double tol = 1e-9) const;
  Vec preimage(const Vec& w, double tol = 1e-9) const;

  /// The same embedding in coordinate form: the coordinate functionals are
  /// positive multiples of the polytope's facet functionals.
  const LogEmbedding& log_embedding() const { return log_; }

private:
  HRep h_;
  SimplexSectionLift lift_;
  PolyhedralNorm norm_{0};
  std::vector<Vec> simplex_verts_;    // vertex k opposite simplex facet k
  Eigen::PartialPivLU<Mat> bary_lu_;  // simplex barycentric solver
  LogEmbedding log_;
};

/// One-shot convenience for the composite embedding.
Vec embed_polytope(const HRep& h, const Vec& p);

/// Unit sphere of the half-range norm restricted to the plane spanned by
/// two carrier vectors: vertices of the section polygon in (s, t) plane
/// coordinates, counterclockwise. Used to inspect induced planar balls.
std::vector<Eigen::Vector2d> norm_unit_sphere_section(const PolyhedralNorm& norm, const Vec& b1,
                                                      const Vec& b2);

}  // namespace hilbert
