#include "hilbert/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hilbert {

double distance_crossratio(const HRep& h, const Vec& p, const Vec& q) {
  h.require_interior(p, "p");
  h.require_interior(q, "q");
  if ((q - p).norm() <= kGeomTol) return 0.0;
  const Chord c = boundary_intersection(h, p, q - p);
  const double log_cr = std::log((q - c.a).norm()) - std::log((p - c.a).norm()) +
                        std::log((p - c.b).norm()) - std::log((q - c.b).norm());
  return 0.5 * log_cr;
}

double distance_from_values(const Vec& values_p, const Vec& values_q) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < values_p.size(); ++i) {
    const double r = std::log(values_p[i]) - std::log(values_q[i]);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return 0.5 * (hi - lo);
}

double distance_birkhoff(const HRep& h, const Vec& p, const Vec& q) {
  h.require_interior(p, "p");
  h.require_interior(q, "q");
  if ((q - p).norm() <= kGeomTol) return 0.0;
  return distance_from_values(h.values(p), h.values(q));
}

double finsler_norm(const HRep& h, const Vec& p, const Vec& v) {
  h.require_interior(p, "p");
  const double vn = v.norm();
  if (vn == 0.0) return 0.0;
  const Chord c = boundary_intersection(h, p, v);
  return 0.5 * vn * (1.0 / c.t_minus + 1.0 / c.t_plus);
}

double finsler_from_values(const Vec& slopes, const Vec& values) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < slopes.size(); ++i) {
    const double s = slopes[i] / values[i];
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  return 0.5 * (hi - lo);
}

ConeSector ConeSector::make(const AffineFunctional& l1, const AffineFunctional& l2) {
  if (l1.gradient.size() != 2 || l2.gradient.size() != 2)
    throw WrongDimension("cone sectors are planar (dim 2)");
  ConeSector s;
  s.l1_ = l1.normalized();
  s.l2_ = l2.normalized();
  const double cross = s.l1_.gradient[0] * s.l2_.gradient[1] - s.l1_.gradient[1] * s.l2_.gradient[0];
  if (std::abs(cross) <= kRankTol)
    throw DegenerateInput("sector lines are parallel (gradients linearly dependent)");
  Mat A(2, 2);
  A.row(0) = s.l1_.gradient;
  A.row(1) = s.l2_.gradient;
  Vec b(2);
  b << -s.l1_.offset, -s.l2_.offset;
  s.apex_ = A.fullPivLu().solve(b);
  return s;
}

double cone_metric(const ConeSector& s, const Vec& x, const Vec& y) {
  if (!s.contains(x)) throw PointOutside("x is not strictly inside the sector");
  if (!s.contains(y)) throw PointOutside("y is not strictly inside the sector");
  const double r = std::log(s.l1().value(x)) - std::log(s.l1().value(y)) +
                   std::log(s.l2().value(y)) - std::log(s.l2().value(x));
  return 0.5 * std::abs(r);
}

std::vector<int> polygon_cyclic_order(const VRep& polygon) {
  if (polygon.dim() != 2) throw WrongDimension("cyclic order requires a polygon (dim 2)");
  const Vec c = polygon.centroid();
  std::vector<int> order(polygon.vertex_count());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Vec& va = polygon.vertices()[a];
    const Vec& vb = polygon.vertices()[b];
    return std::atan2(va[1] - c[1], va[0] - c[0]) < std::atan2(vb[1] - c[1], vb[0] - c[0]);
  });
  return order;
}

std::vector<ConeSector> vertex_sectors(const VRep& polygon) {
  const auto order = polygon_cyclic_order(polygon);
  const int n = static_cast<int>(order.size());
  const Vec c = polygon.centroid();

  // Inward edge functional through vertices (a, b); vanishes on the edge line.
  auto edge_functional = [&](const Vec& a, const Vec& b) {
    Vec normal(2);
    normal << -(b[1] - a[1]), b[0] - a[0];
    AffineFunctional f;
    f.gradient = normal;
    f.offset = -normal.dot(a);
    if (f.value(c) < 0.0) {
      f.gradient = -f.gradient;
      f.offset = -f.offset;
    }
    return f.normalized();
  };

  std::vector<ConeSector> sectors;
  sectors.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Vec& prev = polygon.vertices()[order[(i + n - 1) % n]];
    const Vec& cur = polygon.vertices()[order[i]];
    const Vec& next = polygon.vertices()[order[(i + 1) % n]];
    sectors.push_back(ConeSector::make(edge_functional(prev, cur), edge_functional(cur, next)));
  }
  return sectors;
}

namespace {

double alexander_sum(const VRep& polygon, const Vec& x, const Vec& y, bool one_sided) {
  if (polygon.dim() != 2) throw WrongDimension("Alexander formula requires a polygon (dim 2)");
  const HRep h = hrep_from_vrep(polygon);
  h.require_interior(x, "x");
  h.require_interior(y, "y");
  if ((x - y).norm() <= kGeomTol) return 0.0;

  const auto order = polygon_cyclic_order(polygon);
  const auto sectors = vertex_sectors(polygon);
  double sum = 0.0;
  for (size_t i = 0; i < sectors.size(); ++i) {
    if (one_sided) {
      const Vec& v = polygon.vertices()[order[i]];
      const double side = (y[0] - x[0]) * (v[1] - x[1]) - (y[1] - x[1]) * (v[0] - x[0]);
      // Vertices on the line (xy) contribute a zero sector metric; skip them
      // so the sum is over one strict side only.
      if (side <= 1e-12 * std::max(1.0, (y - x).norm() * (v - x).norm())) continue;
    }
    sum += cone_metric(sectors[i], x, y);
  }
  return sum;
}

}  // namespace

double distance_alexander(const VRep& polygon, const Vec& x, const Vec& y) {
  return 0.5 * alexander_sum(polygon, x, y, /*one_sided=*/false);
}

double distance_alexander_one_sided(const VRep& polygon, const Vec& x, const Vec& y) {
  return alexander_sum(polygon, x, y, /*one_sided=*/true);
}

}  // namespace hilbert
