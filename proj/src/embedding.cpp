#include "hilbert/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hilbert/metric.hpp"

namespace hilbert {

BarycentricPoint BarycentricPoint::make(const Vec& weights) {
  if (weights.size() < 2) throw DegenerateInput("barycentric point needs at least 2 weights");
  if (weights.minCoeff() <= 0.0)
    throw PointOutside("barycentric weights must be strictly positive");
  if (std::abs(weights.sum() - 1.0) > 1e-12)
    throw DegenerateInput("barycentric weights must sum to 1 (within 1e-12)");
  BarycentricPoint p;
  p.w_ = weights;
  return p;
}

Vec LogEmbedding::apply(const Vec& x) const {
  Vec w(carrier_dim);
  for (int i = 0; i < carrier_dim; ++i) {
    const double v = coordinates[i].value(x);
    if (v <= 0.0) throw PointOutside("point is outside the embedding domain");
    w[i] = std::log(v);
  }
  return PolyhedralNorm::zero_mean(w);
}

Vec simplex_embed(const BarycentricPoint& p) {
  return PolyhedralNorm::zero_mean(p.weights().array().log());
}

BarycentricPoint simplex_embed_inverse(const Vec& w) {
  const Vec e = (w.array() - w.maxCoeff()).exp();
  return BarycentricPoint::make(e / e.sum());
}

Vec phi2(const BarycentricPoint& p) {
  if (p.count() != 3) throw WrongDimension("phi2 is the planar (n = 2) map");
  const Vec& a = p.weights();
  Vec w(3);
  w << std::log(a[0] / a[1]), std::log(a[1] / a[2]), std::log(a[2] / a[0]);
  return w;
}

BarycentricPoint phi2_inverse(const Vec& w) {
  if (w.size() != 3) throw WrongDimension("phi2_inverse expects a triple");
  Vec logs(3);
  logs << w[0] + w[1], w[1], 0.0;
  const Vec e = (logs.array() - logs.maxCoeff()).exp();
  return BarycentricPoint::make(e / e.sum());
}

SimplexSectionLift::SimplexSectionLift(int n, int N, HRep simplex, std::vector<Vec> basis,
                                       std::vector<int> order)
    : n_(n), N_(N), simplex_(std::move(simplex)), basis_(std::move(basis)),
      order_(std::move(order)) {
  Mat system(n_ + 1, n_ + 1);
  for (int j = 0; j <= n_; ++j) {
    system.block(0, j, n_, 1) = basis_[j];
    system(n_, j) = 1.0;
  }
  bary_lu_.compute(system);
}

Vec SimplexSectionLift::source_barycentric(const Vec& x) const {
  Vec rhs(n_ + 1);
  rhs.head(n_) = x;
  rhs[n_] = 1.0;
  return bary_lu_.solve(rhs);
}

Vec SimplexSectionLift::lift(const Vec& x) const {
  const Vec xb = source_barycentric(x);
  Vec z = Vec::Zero(N_);
  z.head(std::min(n_ + 1, N_)) = xb.head(std::min(n_ + 1, N_));
  return z;
}

Vec SimplexSectionLift::target_affine_barycentric(const Vec& z) const {
  Vec y(N_ + 1);
  y.head(N_) = z;
  y[N_] = 1.0 - z.sum();
  return y;
}

Vec SimplexSectionLift::unlift(const Vec& z, double tol) const {
  const Vec y = target_affine_barycentric(z);
  for (int j = n_ + 1; j <= N_; ++j)
    if (std::abs(y[j]) > tol)
      throw PointOutside("target point is not on the section plane");
  Vec x = Vec::Zero(n_);
  for (int j = 0; j <= n_; ++j) x += y[j] * basis_[j];
  return x;
}

SimplexSectionLift simplex_section_lift(const HRep& h) {
  const int n = h.dim();
  const int N = h.facet_count() - 1;  // N+1 facets
  // Bounded full-dimensional polytopes have at least n+1 facets.
  if (N < n) throw DegenerateInput("polytope needs at least n+1 facets");

  // Affine basis of the source: n+1 affinely independent vertices.
  const auto verts = vrep_from_hrep(h).vertices();
  const auto basis_idx = affine_basis_indices(verts, n + 1);
  std::vector<Vec> basis;
  basis.reserve(n + 1);
  for (int id : basis_idx) basis.push_back(verts[id]);

  // Facet functionals in barycentric coordinates: row i is (L_i(e_1), ...,
  // L_i(e_{n+1})), since affine maps are linear on affine combinations.
  Mat coeff(N + 1, n + 1);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= n; ++j) coeff(i, j) = h.functionals()[i].value(basis[j]);

  // Reorder so the first n+1 coefficient rows are linearly independent
  // (greedy rank-building scan, pivot tolerance 1e-10).
  std::vector<int> order;
  {
    Mat q(n + 1, n + 1);  // orthonormalized accepted rows
    int got = 0;
    std::vector<bool> used(N + 1, false);
    for (int i = 0; i <= N && got < n + 1; ++i) {
      Vec r = coeff.row(i).transpose();
      for (int b = 0; b < got; ++b) r -= q.row(b).dot(coeff.row(i)) * q.row(b).transpose();
      if (r.norm() > 1e-10 * std::max(1.0, coeff.row(i).norm())) {
        q.row(got++) = r / r.norm();
        order.push_back(i);
        used[i] = true;
      }
    }
    if (got < n + 1)
      throw DegenerateInput("fewer than n+1 affinely independent facets");
    for (int i = 0; i <= N; ++i)
      if (!used[i]) order.push_back(i);
  }

  // Simplex facets on R^N, expressed through the affine coordinates
  // y = (z_1, ..., z_N, 1 - sum z) of the standard affine basis:
  //   H_k(y) = sum_j a_j^{order[k]} y_j           for k <= n
  //   H_k(y) = sum_j a_j^{order[k]} y_j + y_k     for k >= n+1
  std::vector<AffineFunctional> hfuncs;
  hfuncs.reserve(N + 1);
  for (int k = 0; k <= N; ++k) {
    Vec beta = Vec::Zero(N + 1);
    beta.head(n + 1) = coeff.row(order[k]).transpose();
    if (k >= n + 1) beta[k] += 1.0;
    AffineFunctional f;
    f.gradient = beta.head(N).array() - beta[N];
    f.offset = beta[N];
    hfuncs.push_back(std::move(f));
  }

  HRep simplex = HRep::make(N, std::move(hfuncs));
  if (simplex.facet_count() != N + 1)
    throw DegenerateInput("section lift produced duplicate simplex facets");
  return SimplexSectionLift(n, N, std::move(simplex), std::move(basis), std::move(order));
}

PolytopeEmbedding::PolytopeEmbedding(const HRep& h)
    : h_(h), lift_(simplex_section_lift(h)), norm_(lift_.target_dim() + 1) {
  const int N = lift_.target_dim();
  const auto verts = vrep_from_hrep(lift_.simplex()).vertices();
  if (static_cast<int>(verts.size()) != N + 1)
    throw DegenerateInput("section lift did not produce a simplex");

  // Order vertices so vertex k is opposite simplex facet k (the unique
  // facet functional not vanishing there).
  simplex_verts_.assign(N + 1, Vec());
  for (const auto& v : verts) {
    int opposite = -1;
    for (int i = 0; i <= N; ++i) {
      if (std::abs(lift_.simplex().functionals()[i].value(v)) > kActiveTol) {
        if (opposite >= 0) throw DegenerateInput("simplex vertex active sets are malformed");
        opposite = i;
      }
    }
    if (opposite < 0 || simplex_verts_[opposite].size() != 0)
      throw DegenerateInput("simplex vertex active sets are malformed");
    simplex_verts_[opposite] = v;
  }

  Mat system(N + 1, N + 1);
  for (int k = 0; k <= N; ++k) {
    system.block(0, k, N, 1) = simplex_verts_[k];
    system(N, k) = 1.0;
  }
  bary_lu_.compute(system);

  // Coordinate form: M_k(x) = beta_k(A(x)) is affine in x; reconstruct each
  // from values at 0, e_1, ..., e_n.
  const int n = h_.dim();
  log_.source_dim = n;
  log_.carrier_dim = N + 1;
  log_.norm = norm_;
  Mat vals(N + 1, n + 1);
  {
    Vec rhs(N + 1);
    auto bary_at = [&](const Vec& x) {
      rhs.head(N) = lift_.lift(x);
      rhs[N] = 1.0;
      return bary_lu_.solve(rhs);
    };
    const Vec at0 = bary_at(Vec::Zero(n));
    vals.col(0) = at0;
    for (int j = 0; j < n; ++j) vals.col(j + 1) = bary_at(Vec::Unit(n, j));
  }
  log_.coordinates.clear();
  for (int k = 0; k <= N; ++k) {
    AffineFunctional f;
    f.offset = vals(k, 0);
    f.gradient = Vec(n);
    for (int j = 0; j < n; ++j) f.gradient[j] = vals(k, j + 1) - vals(k, 0);
    log_.coordinates.push_back(std::move(f));
  }
}

BarycentricPoint PolytopeEmbedding::simplex_barycentric(const Vec& p) const {
  h_.require_interior(p, "p");
  const int N = lift_.target_dim();
  Vec rhs(N + 1);
  rhs.head(N) = lift_.lift(p);
  rhs[N] = 1.0;
  Vec beta = bary_lu_.solve(rhs);
  if (beta.minCoeff() <= 0.0)
    throw PointOutside("lifted point is not interior to the section simplex");
  // Clean up solver drift so the weights meet the 1e-12 sum invariant.
  beta /= beta.sum();
  return BarycentricPoint::make(beta);
}

Vec PolytopeEmbedding::embed(const Vec& p) const {
  return simplex_embed(simplex_barycentric(p));
}

bool PolytopeEmbedding::has_preimage(const Vec& w, double tol) const {
  const BarycentricPoint beta = simplex_embed_inverse(w);
  const int N = lift_.target_dim();
  Vec z = Vec::Zero(N);
  for (int k = 0; k <= N; ++k) z += beta.weights()[k] * simplex_verts_[k];
  const Vec y = lift_.target_affine_barycentric(z);
  for (int j = h_.dim() + 1; j <= N; ++j)
    if (std::abs(y[j]) > tol) return false;
  return true;
}

Vec PolytopeEmbedding::preimage(const Vec& w, double tol) const {
  const BarycentricPoint beta = simplex_embed_inverse(w);
  const int N = lift_.target_dim();
  Vec z = Vec::Zero(N);
  for (int k = 0; k <= N; ++k) z += beta.weights()[k] * simplex_verts_[k];
  return lift_.unlift(z, tol);
}

Vec embed_polytope(const HRep& h, const Vec& p) {
  return PolytopeEmbedding(h).embed(p);
}

std::vector<Eigen::Vector2d> norm_unit_sphere_section(const PolyhedralNorm& norm, const Vec& b1,
                                                      const Vec& b2) {
  const int m = norm.carrier_dim();
  if (b1.size() != m || b2.size() != m)
    throw WrongDimension("section basis does not match norm carrier");
  // N(s b1 + t b2) <= 1 is the intersection of the halfplanes
  // (w_i - w_j)/2 <= 1 over ordered coordinate pairs.
  std::vector<AffineFunctional> cuts;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      Vec g(2);
      g << -0.5 * (b1[i] - b1[j]), -0.5 * (b2[i] - b2[j]);
      if (g.norm() <= kRankTol) continue;
      cuts.push_back({g, 1.0});
    }
  }
  const HRep section = HRep::make(2, std::move(cuts));
  const VRep poly = vrep_from_hrep(section);
  const auto order = polygon_cyclic_order(poly);
  std::vector<Eigen::Vector2d> out;
  out.reserve(order.size());
  for (int id : order) out.emplace_back(poly.vertices()[id][0], poly.vertices()[id][1]);
  return out;
}

}  // namespace hilbert
