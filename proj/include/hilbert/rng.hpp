#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace hilbert {

// Deterministic RNG layer. std::mt19937_64 has a standardized bit stream,
// but the std distributions do not, so all value transforms live here.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Derive an independent child seed (for per-batch RNG streams).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 1));
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (two uniforms per pair, cached).
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  Eigen::VectorXd gaussian_vector(int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = gaussian();
    return v;
  }

  /// Uniform direction on the unit sphere S^{n-1}.
  Eigen::VectorXd sphere_direction(int n) {
    Eigen::VectorXd v;
    double norm = 0.0;
    do {
      v = gaussian_vector(n);
      norm = v.norm();
    } while (norm < 1e-12);
    return v / norm;
  }

  /// Positive weights summing to 1 (uniform on the open simplex).
  Eigen::VectorXd simplex_weights(int count) {
    Eigen::VectorXd w(count);
    double sum = 0.0;
    for (int i = 0; i < count; ++i) {
      double u = 0.0;
      while (u <= 0.0) u = uniform();
      w[i] = -std::log(u);
      sum += w[i];
    }
    return w / sum;
  }

  std::uint64_t raw() { return engine_(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Rejection-free modulo is fine here: n is tiny compared to 2^64.
    return engine_() % n;
  }

private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// Deterministic well-spread direction set, used for quadratures and
/// boundary sampling. 2-D: equally spaced angles (antipodal for even k).
/// 3-D: Fibonacci sphere. Higher dims: fixed-seed Gaussian directions.
inline std::vector<Eigen::VectorXd> direction_set(int dim, int count) {
  std::vector<Eigen::VectorXd> dirs;
  dirs.reserve(count);
  if (dim == 1) {
    for (int k = 0; k < count; ++k) {
      Eigen::VectorXd u(1);
      u[0] = (k % 2 == 0) ? 1.0 : -1.0;
      dirs.push_back(u);
    }
  } else if (dim == 2) {
    for (int k = 0; k < count; ++k) {
      const double a = 2.0 * M_PI * k / count;
      Eigen::VectorXd u(2);
      u << std::cos(a), std::sin(a);
      dirs.push_back(u);
    }
  } else if (dim == 3) {
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < count; ++k) {
      const double z = 1.0 - 2.0 * (k + 0.5) / count;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double a = golden * k;
      Eigen::VectorXd u(3);
      u << r * std::cos(a), r * std::sin(a), z;
      dirs.push_back(u);
    }
  } else {
    Rng rng(0x5EEDED00D1Dull + static_cast<std::uint64_t>(dim));
    for (int k = 0; k < count; ++k) dirs.push_back(rng.sphere_direction(dim));
  }
  return dirs;
}

}  // namespace hilbert
