#include "hilbert/bilipschitz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hilbert/metric.hpp"
#include "hilbert/rng.hpp"

namespace hilbert {
namespace {

/// Interior point as a random positive combination of the vertices.
Vec dirichlet_point(Rng& rng, const std::vector<Vec>& verts, int dim) {
  const Vec w = rng.simplex_weights(static_cast<int>(verts.size()));
  Vec x = Vec::Zero(dim);
  for (size_t i = 0; i < verts.size(); ++i) x += w[i] * verts[i];
  return x;
}

/// Point on the segment [from, to) with min_i L_i(x) = depth. min L is
/// concave along the segment and vanishes at `to`, so the superlevel set is
/// an initial interval; bisection finds its right end.
Vec slide_to_depth(const HRep& h, const Vec& from, const Vec& to, double depth) {
  double lo = 0.0, hi = 1.0;  // min L(from) > depth, min L(to) ~ 0
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    const Vec x = from + mid * (to - from);
    if (h.min_value(x) > depth)
      lo = mid;
    else
      hi = mid;
  }
  return from + lo * (to - from);
}

/// Interior point of h at the given boundary depth: walk a dirichlet point
/// toward the boundary along a random chord.
Vec stratified_point(Rng& rng, const HRep& h, const std::vector<Vec>& verts, double depth) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vec x0 = dirichlet_point(rng, verts, h.dim());
    // Pull toward the witness until strictly deeper than the target.
    for (int k = 0; k < 60 && h.min_value(x0) <= depth * 1.001; ++k)
      x0 = 0.5 * (x0 + h.witness());
    if (h.min_value(x0) <= depth * 1.001) continue;
    const Chord c = boundary_intersection(h, x0, rng.sphere_direction(h.dim()));
    return slide_to_depth(h, x0, c.b, depth);
  }
  throw InsufficientSamples("could not reach the requested boundary depth");
}

struct BandAccumulator {
  double min_ratio = std::numeric_limits<double>::infinity();
  double max_ratio = -std::numeric_limits<double>::infinity();
  WitnessPair min_witness, max_witness;
  long counted = 0;

  void add(double ratio, const Vec& x, const Vec& y) {
    ++counted;
    if (ratio < min_ratio) {
      min_ratio = ratio;
      min_witness = {x, y, ratio};
    }
    if (ratio > max_ratio) {
      max_ratio = ratio;
      max_witness = {x, y, ratio};
    }
  }

  void merge(const BandAccumulator& other) {
    counted += other.counted;
    if (other.min_ratio < min_ratio) {
      min_ratio = other.min_ratio;
      min_witness = other.min_witness;
    }
    if (other.max_ratio > max_ratio) {
      max_ratio = other.max_ratio;
      max_witness = other.max_witness;
    }
  }
};

}  // namespace

DualVector bernig_map(const HRep& h, const Vec& x) {
  h.require_interior(x, "x");
  const Vec vals = h.values(x);
  return h.gradients().transpose() * vals.array().log().matrix();
}

Vec bernig_inverse(const HRep& h, const DualVector& w, const Vec& start, double tol,
                   int max_iter) {
  h.require_interior(start, "start");
  Vec x = start;
  for (int it = 0; it < max_iter; ++it) {
    const Vec vals = h.values(x);
    const Vec r = h.gradients().transpose() * vals.array().log().matrix() - w;
    if (r.norm() <= tol) return x;
    const Mat jac = h.gradients().transpose() *
                    vals.cwiseInverse().asDiagonal() * h.gradients();
    const Vec step = jac.ldlt().solve(-r);
    double alpha = 1.0;
    for (int back = 0; back < 60; ++back) {
      const Vec cand = x + alpha * step;
      if (h.min_value(cand) > kGeomTol) {
        const Vec vals2 = h.values(cand);
        const Vec r2 = h.gradients().transpose() * vals2.array().log().matrix() - w;
        if (r2.norm() < r.norm()) {
          x = cand;
          break;
        }
      }
      alpha *= 0.5;
      if (back == 59) throw NumericalFailure("bernig_inverse: line search stalled");
    }
  }
  throw NumericalFailure("bernig_inverse: Newton did not converge");
}

bool DistortionReport::stable(double slack) const {
  for (size_t k = 0; k + 2 < per_depth.size(); ++k)
    if (per_depth[k + 2].width() > per_depth[k].width() * (1.0 + slack)) return false;
  return true;
}

DistortionReport distortion_report(const HRep& h, const SamplerConfig& cfg) {
  if (cfg.pairs < static_cast<long>(cfg.depths.size()))
    throw InsufficientSamples("need at least one pair per depth stratum");
  const auto verts = vrep_from_hrep(h).vertices();
  const long per_depth = cfg.pairs / static_cast<long>(cfg.depths.size());

  DistortionReport report;
  BandAccumulator global;
  for (size_t di = 0; di < cfg.depths.size(); ++di) {
    const double depth = cfg.depths[di];
    // Independent per-batch RNG streams, merged in batch order, so serial
    // and parallel runs agree bit for bit.
    const long batch_size = 64;
    const int batches = static_cast<int>((per_depth + batch_size - 1) / batch_size);
    std::vector<BandAccumulator> acc(batches);
    for_each_index(cfg.exec, batches, [&](int b) {
      Rng rng(derive_seed(cfg.seed, di * 100003 + static_cast<std::uint64_t>(b)));
      const long count = std::min(batch_size, per_depth - b * batch_size);
      for (long s = 0; s < count; ++s) {
        const Vec x = stratified_point(rng, h, verts, depth);
        const bool paired_depth = rng.uniform() < 0.5;
        const Vec y = paired_depth ? stratified_point(rng, h, verts, depth)
                                   : dirichlet_point(rng, verts, h.dim());
        const double d = distance_from_values(h.values(x), h.values(y));
        if (d < 1e-6) continue;  // guard: indistinguishable pairs are not counted
        const double ratio = (bernig_map(h, x) - bernig_map(h, y)).norm() / d;
        acc[b].add(ratio, x, y);
      }
    });
    BandAccumulator stratum;
    for (const auto& a : acc) stratum.merge(a);
    if (stratum.counted > 0)
      report.per_depth.push_back({depth, stratum.min_ratio, stratum.max_ratio, stratum.counted});
    global.merge(stratum);
  }
  if (global.counted < 2) throw InsufficientSamples("all sampled pairs were too close");
  report.sample_count = global.counted;
  report.min_ratio = global.min_ratio;
  report.max_ratio = global.max_ratio;
  report.min_witness = global.min_witness;
  report.max_witness = global.max_witness;
  return report;
}

ComparisonBand finsler_comparison(const HRep& a, const HRep& b, const VRep& shared_simplex,
                                  const ComparisonConfig& cfg) {
  const int n = a.dim();
  if (b.dim() != n || shared_simplex.dim() != n)
    throw WrongDimension("comparison inputs must share one ambient dimension");
  if (shared_simplex.vertex_count() != n + 1)
    throw InvalidNeighborhood("shared neighborhood must be a simplex (n+1 vertices)");
  for (const auto& v : shared_simplex.vertices()) {
    if (a.min_value(v) < -kActiveTol || b.min_value(v) < -kActiveTol)
      throw InvalidNeighborhood("simplex is not contained in both bodies");
  }
  const Vec inner = shared_simplex.centroid();
  if (!a.is_interior(inner) || !b.is_interior(inner))
    throw InvalidNeighborhood("simplex interior is not inside both bodies");

  const HRep hs = hrep_from_vrep(shared_simplex);

  // The stratification target: a simplex facet whose hyperplane is a facet
  // of both bodies (the face shared with both boundaries). Falls back to
  // the simplex's own boundary when no such facet exists.
  int shared_facet = -1;
  for (int i = 0; i < hs.facet_count() && shared_facet < 0; ++i) {
    const auto matches = [&](const HRep& body) {
      for (const auto& f : body.functionals())
        if ((f.gradient - hs.functionals()[i].gradient).lpNorm<Eigen::Infinity>() <= 1e-7 &&
            std::abs(f.offset - hs.functionals()[i].offset) <= 1e-7)
          return true;
      return false;
    };
    if (matches(a) && matches(b)) shared_facet = i;
  }
  std::vector<Vec> facet_verts;
  for (const auto& v : shared_simplex.vertices())
    if (shared_facet >= 0 &&
        std::abs(hs.functionals()[shared_facet].value(v)) <= kActiveTol)
      facet_verts.push_back(v);

  const auto dirs = direction_set(n, cfg.directions);
  Mat da(cfg.directions, a.facet_count());
  Mat db(cfg.directions, b.facet_count());
  for (int k = 0; k < cfg.directions; ++k) {
    da.row(k) = (a.gradients() * dirs[k]).transpose();
    db.row(k) = (b.gradients() * dirs[k]).transpose();
  }

  ComparisonBand band;
  BandAccumulator global;
  for (size_t di = 0; di < cfg.depths.size(); ++di) {
    const double depth = cfg.depths[di];
    const int points = static_cast<int>(cfg.points_per_depth);
    std::vector<BandAccumulator> acc(points);
    // Depth is measured on body A when the simplex shares a facet hyperplane
    // with both bodies (points then approach the common boundary face);
    // otherwise it falls back to the simplex's own boundary.
    const HRep& depth_ref = !facet_verts.empty() ? a : hs;
    for_each_index(cfg.exec, points, [&](int pi) {
      Rng rng(derive_seed(cfg.seed, di * 100003 + static_cast<std::uint64_t>(pi)));
      Vec x0 = dirichlet_point(rng, shared_simplex.vertices(), n);
      for (int k = 0; k < 60 && depth_ref.min_value(x0) <= depth * 1.001; ++k)
        x0 = 0.5 * (x0 + inner);
      if (depth_ref.min_value(x0) <= depth * 1.001) return;
      Vec target;
      if (!facet_verts.empty()) {
        const Vec w = rng.simplex_weights(static_cast<int>(facet_verts.size()));
        target = Vec::Zero(n);
        for (size_t i = 0; i < facet_verts.size(); ++i) target += w[i] * facet_verts[i];
      } else {
        target = boundary_intersection(hs, x0, rng.sphere_direction(n)).b;
      }
      const Vec x = slide_to_depth(depth_ref, x0, target, depth);
      const Vec va = a.values(x);
      const Vec vb = b.values(x);
      if (va.minCoeff() <= kGeomTol || vb.minCoeff() <= kGeomTol) return;
      for (int k = 0; k < cfg.directions; ++k) {
        const double fa = finsler_from_values(da.row(k).transpose(), va);
        const double fb = finsler_from_values(db.row(k).transpose(), vb);
        acc[pi].add(fa / fb, x, dirs[k]);
      }
    });
    BandAccumulator stratum;
    for (const auto& s : acc) stratum.merge(s);
    if (stratum.counted > 0)
      band.per_depth.push_back({depth, stratum.min_ratio, stratum.max_ratio, stratum.counted});
    global.merge(stratum);
  }
  if (global.counted == 0) throw InsufficientSamples("no comparison samples were drawn");
  band.min_ratio = global.min_ratio;
  band.max_ratio = global.max_ratio;
  return band;
}

}  // namespace hilbert
