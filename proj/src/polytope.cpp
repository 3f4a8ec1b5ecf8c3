#include "hilbert/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

namespace hilbert {
namespace {

// Iterate over all k-subsets of {0..m-1}.
void for_each_subset(int m, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k > m || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == m - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool same_facet(const AffineFunctional& a, const AffineFunctional& b) {
  return (a.gradient - b.gradient).lpNorm<Eigen::Infinity>() <= 1e-7 &&
         std::abs(a.offset - b.offset) <= 1e-7;
}

std::vector<AffineFunctional> dedup_functionals(std::vector<AffineFunctional> funcs) {
  std::vector<AffineFunctional> out;
  for (auto& f : funcs) {
    bool dup = false;
    for (const auto& g : out)
      if (same_facet(f, g)) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(std::move(f));
  }
  return out;
}

// Kernel direction of the rows (expects rank = rows for a 1-dim kernel).
// Returns an empty vector when the row rank is deficient.
Vec kernel_direction(const Mat& rows, double tol) {
  const int n = static_cast<int>(rows.cols());
  if (rows.rows() == 0) {
    Vec u = Vec::Zero(n);
    u[0] = 1.0;
    return u;
  }
  Eigen::JacobiSVD<Mat> svd(rows, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double scale = std::max(1.0, sv.size() > 0 ? sv[0] : 0.0);
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] <= tol * scale && i < static_cast<int>(rows.rows())) return Vec();
  return svd.matrixV().col(n - 1);
}

// Exact desk-scale boundedness test on the recession cone {u : G u >= 0}.
// The cone contains a line iff rank(G) < n; otherwise it is pointed and any
// nonzero ray is witnessed by an extreme ray with n-1 active rows.
bool has_recession_direction(const Mat& grad) {
  const int n = static_cast<int>(grad.cols());
  const int m = static_cast<int>(grad.rows());
  {
    Eigen::JacobiSVD<Mat> svd(grad);
    const auto& sv = svd.singularValues();
    int rank = 0;
    const double scale = std::max(1.0, sv.size() > 0 ? sv[0] : 0.0);
    for (int i = 0; i < sv.size(); ++i)
      if (sv[i] > kRankTol * scale) ++rank;
    if (rank < n) return true;
  }
  bool found = false;
  for_each_subset(m, n - 1, [&](const std::vector<int>& idx) {
    if (found) return;
    Mat rows(n - 1, n);
    for (int r = 0; r < n - 1; ++r) rows.row(r) = grad.row(idx[r]);
    const Vec u = kernel_direction(rows, kRankTol);
    if (u.size() == 0) return;
    if ((grad * u).minCoeff() >= -1e-10 || (grad * (-u)).minCoeff() >= -1e-10) found = true;
  });
  return found;
}

// All points where n functionals with independent gradients vanish and every
// functional is nonnegative (within kActiveTol), deduplicated.
std::vector<Vec> enumerate_feasible_basic_points(int dim, const Mat& grad, const Vec& off) {
  const int m = static_cast<int>(grad.rows());
  std::vector<Vec> pts;
  for_each_subset(m, dim, [&](const std::vector<int>& idx) {
    Mat A(dim, dim);
    Vec b(dim);
    for (int r = 0; r < dim; ++r) {
      A.row(r) = grad.row(idx[r]);
      b[r] = -off[idx[r]];
    }
    Eigen::FullPivLU<Mat> lu(A);
    lu.setThreshold(kRankTol);
    if (lu.rank() < dim) return;
    const Vec x = lu.solve(b);
    if (!x.allFinite()) return;
    if ((grad * x + off).minCoeff() < -kActiveTol) return;
    for (const auto& p : pts)
      if ((p - x).lpNorm<Eigen::Infinity>() <= 1e-7) return;
    pts.push_back(x);
  });
  return pts;
}

// Supporting hyperplanes of the hull of a spanning point set, as inward
// functionals (unit gradient, deduplicated). Each facet of the hull is
// spanned by n affinely independent input points, so the n-subset sweep
// finds exactly the facets.
std::vector<AffineFunctional> hull_facets(int dim, const std::vector<Vec>& pts) {
  std::vector<AffineFunctional> facets;
  const int m = static_cast<int>(pts.size());
  if (dim == 1) {
    double lo = pts[0][0], hi = pts[0][0];
    for (const auto& p : pts) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    AffineFunctional f1, f2;
    f1.gradient = Vec::Constant(1, 1.0);
    f1.offset = -lo;
    f2.gradient = Vec::Constant(1, -1.0);
    f2.offset = hi;
    return {f1, f2};
  }
  for_each_subset(m, dim, [&](const std::vector<int>& idx) {
    Mat diffs(dim - 1, dim);
    for (int r = 1; r < dim; ++r) diffs.row(r - 1) = pts[idx[r]] - pts[idx[0]];
    const Vec normal = kernel_direction(diffs, kRankTol);
    if (normal.size() == 0) return;
    double lo = 0.0, hi = 0.0;
    for (const auto& p : pts) {
      const double s = normal.dot(p - pts[idx[0]]);
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    const double side_tol = 1e-9;
    Vec inward;
    if (hi <= side_tol && lo < -side_tol)
      inward = -normal;
    else if (lo >= -side_tol && hi > side_tol)
      inward = normal;
    else
      return;  // not supporting (or all points coplanar; caught by rank checks)
    AffineFunctional f;
    f.gradient = inward;
    f.offset = -inward.dot(pts[idx[0]]);
    f = f.normalized();
    for (const auto& g : facets)
      if (same_facet(f, g)) return;
    facets.push_back(std::move(f));
  });
  return facets;
}

// A point is extremal for the hull iff its active facets span rank n.
bool is_hull_vertex(int dim, const Vec& p, const std::vector<AffineFunctional>& facets) {
  std::vector<Vec> active;
  for (const auto& f : facets)
    if (std::abs(f.value(p)) <= kActiveTol) active.push_back(f.gradient);
  if (static_cast<int>(active.size()) < dim) return false;
  Mat rows(active.size(), dim);
  for (size_t r = 0; r < active.size(); ++r) rows.row(r) = active[r];
  Eigen::JacobiSVD<Mat> svd(rows);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > kRankTol * std::max(1.0, sv[0])) ++rank;
  return rank == dim;
}

}  // namespace

int affine_rank(const std::vector<Vec>& points, double tol) {
  if (points.empty()) return -1;
  if (points.size() == 1) return 0;
  const int n = static_cast<int>(points[0].size());
  Mat diffs(points.size() - 1, n);
  for (size_t k = 1; k < points.size(); ++k) diffs.row(k - 1) = points[k] - points[0];
  Eigen::JacobiSVD<Mat> svd(diffs);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > tol * std::max(1.0, sv[0])) ++rank;
  return rank;
}

std::vector<int> affine_basis_indices(const std::vector<Vec>& points, int count, double tol) {
  // Affine independence of points == linear independence of (p, 1) rows.
  const int n = points.empty() ? 0 : static_cast<int>(points[0].size());
  std::vector<int> chosen;
  Mat basis(count, n + 1);  // orthonormal rows, grown greedily
  int got = 0;
  for (int i = 0; i < static_cast<int>(points.size()) && got < count; ++i) {
    Vec h(n + 1);
    h.head(n) = points[i];
    h[n] = 1.0;
    Vec r = h;
    for (int b = 0; b < got; ++b) r -= basis.row(b).dot(h) * basis.row(b).transpose();
    if (r.norm() > tol * std::max(1.0, h.norm())) {
      basis.row(got) = r / r.norm();
      ++got;
      chosen.push_back(i);
    }
  }
  if (got < count) {
    std::ostringstream os;
    os << "needed " << count << " affinely independent points, found " << got;
    throw DegenerateInput(os.str());
  }
  return chosen;
}

void HRep::require_interior(const Vec& x, const char* label) const {
  if (static_cast<int>(x.size()) != dim_)
    throw WrongDimension(std::string(label) + ": point dimension does not match polytope");
  const double m = min_value(x);
  if (m <= kGeomTol) {
    std::ostringstream os;
    os << label << " is not strictly interior (min functional value " << m << " <= " << kGeomTol
       << ")";
    throw PointOutside(os.str());
  }
}

HRep HRep::make(int dim, std::vector<AffineFunctional> functionals) {
  if (dim < 1) throw DegenerateInput("dimension must be >= 1");
  std::vector<AffineFunctional> funcs;
  funcs.reserve(functionals.size());
  for (auto& f : functionals) {
    if (static_cast<int>(f.gradient.size()) != dim)
      throw WrongDimension("functional gradient does not match dimension");
    if (!f.gradient.allFinite() || !std::isfinite(f.offset))
      throw DegenerateInput("functional has non-finite coefficients");
    funcs.push_back(f.normalized());
  }
  funcs = dedup_functionals(std::move(funcs));

  HRep h;
  h.dim_ = dim;
  h.funcs_ = std::move(funcs);
  const int m = static_cast<int>(h.funcs_.size());
  h.grad_.resize(m, dim);
  h.off_.resize(m);
  for (int i = 0; i < m; ++i) {
    h.grad_.row(i) = h.funcs_[i].gradient;
    h.off_[i] = h.funcs_[i].offset;
  }

  if (has_recession_direction(h.grad_))
    throw UnboundedPolytope("halfspace intersection has a recession direction");

  const auto verts = enumerate_feasible_basic_points(dim, h.grad_, h.off_);
  if (static_cast<int>(verts.size()) < dim + 1 || affine_rank(verts) < dim)
    throw DegenerateInput("halfspace intersection has empty interior");
  Vec centroid = Vec::Zero(dim);
  for (const auto& v : verts) centroid += v;
  centroid /= static_cast<double>(verts.size());
  if ((h.grad_ * centroid + h.off_).minCoeff() <= kGeomTol)
    throw DegenerateInput("halfspace intersection has empty interior");
  h.witness_ = centroid;
  return h;
}

VRep VRep::make(int dim, std::vector<Vec> vertices) {
  if (dim < 1) throw DegenerateInput("dimension must be >= 1");
  if (static_cast<int>(vertices.size()) < dim + 1)
    throw DegenerateInput("need at least dim+1 vertices");
  for (const auto& v : vertices) {
    if (static_cast<int>(v.size()) != dim)
      throw WrongDimension("vertex dimension does not match");
    if (!v.allFinite()) throw DegenerateInput("vertex has non-finite coordinates");
  }
  if (affine_rank(vertices) < dim)
    throw DegenerateInput("vertices do not affinely span the space");
  const auto facets = hull_facets(dim, vertices);
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (!is_hull_vertex(dim, vertices[i], facets)) {
      std::ostringstream os;
      os << "vertex " << i << " is not extremal (inside the hull of the others)";
      throw DegenerateInput(os.str());
    }
  }
  VRep v;
  v.dim_ = dim;
  v.verts_ = std::move(vertices);
  return v;
}

Vec VRep::centroid() const {
  Vec c = Vec::Zero(dim_);
  for (const auto& v : verts_) c += v;
  return c / static_cast<double>(verts_.size());
}

HRep hrep_from_vrep(const VRep& v) {
  return HRep::make(v.dim(), hull_facets(v.dim(), v.vertices()));
}

VRep vrep_from_hrep(const HRep& h) {
  // h is bounded by construction; an unbounded intersection cannot reach
  // this point because HRep::make throws UnboundedPolytope.
  auto pts = enumerate_feasible_basic_points(h.dim(), h.gradients(), h.offsets());
  return VRep::make(h.dim(), std::move(pts));
}

Chord boundary_intersection(const HRep& h, const Vec& p, const Vec& u) {
  if (static_cast<int>(u.size()) != h.dim())
    throw WrongDimension("direction dimension does not match polytope");
  const double un = u.norm();
  if (un <= 0.0 || !u.allFinite()) throw ZeroDirection("direction must be nonzero");
  h.require_interior(p, "chord base point");

  const Vec unit = u / un;
  const Vec vals = h.values(p);
  const Vec slope = h.gradients() * unit;
  double t_plus = std::numeric_limits<double>::infinity();
  double t_minus = std::numeric_limits<double>::infinity();
  int plus_facet = -1, minus_facet = -1;
  for (int i = 0; i < h.facet_count(); ++i) {
    if (slope[i] < 0.0) {
      const double t = vals[i] / -slope[i];
      if (t < t_plus) {
        t_plus = t;
        plus_facet = i;
      }
    } else if (slope[i] > 0.0) {
      const double t = vals[i] / slope[i];
      if (t < t_minus) {
        t_minus = t;
        minus_facet = i;
      }
    }
  }
  // Boundedness guarantees both sides hit a facet.
  if (plus_facet < 0 || minus_facet < 0)
    throw UnboundedPolytope("ray does not meet the boundary");
  Chord c;
  c.t_plus = t_plus;
  c.t_minus = t_minus;
  c.origin = p;
  c.unit_dir = unit;
  c.a = p - t_minus * unit;
  c.b = p + t_plus * unit;
  c.plus_facet = plus_facet;
  c.minus_facet = minus_facet;
  return c;
}

FaceLattice::FaceLattice(std::vector<Vec> vertices, std::vector<Face> faces)
    : verts_(std::move(vertices)), faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_ids < b.vertex_ids;
  });
}

std::vector<int> FaceLattice::f_vector(int dim) const {
  std::vector<int> f(dim + 1, 0);
  for (const auto& face : faces_)
    if (face.dim <= dim) ++f[face.dim];
  return f;
}

FaceLattice face_lattice(const HRep& h) {
  const auto verts = vrep_from_hrep(h).vertices();
  const int nv = static_cast<int>(verts.size());
  const int nf = h.facet_count();
  if (nv > 64 || nf > 64)
    throw DegenerateInput("face lattice enumeration supports at most 64 vertices/facets");

  std::vector<std::uint64_t> active(nv, 0);
  for (int v = 0; v < nv; ++v)
    for (int i = 0; i < nf; ++i)
      if (std::abs(h.functionals()[i].value(verts[v])) <= kActiveTol)
        active[v] |= (std::uint64_t{1} << i);

  // Faces are exactly the vertex sets {v : active(v) >= S}; close the family
  // generated by the whole polytope under single-functional refinement.
  const std::uint64_t all = nv == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << nv) - 1);
  std::set<std::uint64_t> seen{all};
  std::vector<std::uint64_t> queue{all};
  while (!queue.empty()) {
    const std::uint64_t w = queue.back();
    queue.pop_back();
    std::uint64_t common = ~std::uint64_t{0};
    for (int v = 0; v < nv; ++v)
      if (w & (std::uint64_t{1} << v)) common &= active[v];
    for (int i = 0; i < nf; ++i) {
      if (common & (std::uint64_t{1} << i)) continue;
      std::uint64_t w2 = 0;
      for (int v = 0; v < nv; ++v)
        if ((w & (std::uint64_t{1} << v)) && (active[v] & (std::uint64_t{1} << i)))
          w2 |= (std::uint64_t{1} << v);
      if (w2 != 0 && seen.insert(w2).second) queue.push_back(w2);
    }
  }

  std::vector<Face> faces;
  for (const std::uint64_t w : seen) {
    Face face;
    std::vector<Vec> pts;
    std::uint64_t common = ~std::uint64_t{0};
    for (int v = 0; v < nv; ++v)
      if (w & (std::uint64_t{1} << v)) {
        face.vertex_ids.push_back(v);
        pts.push_back(verts[v]);
        common &= active[v];
      }
    for (int i = 0; i < nf; ++i)
      if (common & (std::uint64_t{1} << i)) face.active_facets.push_back(i);
    face.dim = affine_rank(pts);
    faces.push_back(std::move(face));
  }
  return FaceLattice(verts, std::move(faces));
}

}  // namespace hilbert
