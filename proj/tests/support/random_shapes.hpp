#pragma once

// Random instance generators shared by the unit and acceptance suites.

#include "nonsep/polytope.hpp"
#include "nonsep/shapes.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace nonsep::testing {

inline Vec gaussian_vec(std::mt19937_64& rng, int d) {
  std::normal_distribution<double> g;
  Vec v(d);
  for (int j = 0; j < d; ++j) v(j) = g(rng);
  return v;
}

inline Vec unit_vec(std::mt19937_64& rng, int d) {
  Vec v = gaussian_vec(rng, d);
  while (v.norm() < 1e-6) v = gaussian_vec(rng, d);
  return v.normalized();
}

/// Hull of `k` random points on a perturbed sphere, recentred at the vertex centroid.
inline Polytope random_polytope(std::mt19937_64& rng, int d, int k) {
  std::uniform_real_distribution<double> r(0.6, 1.4);
  while (true) {
    std::vector<Vec> pts;
    for (int i = 0; i < k; ++i) pts.push_back(unit_vec(rng, d) * r(rng));
    try {
      auto p = Polytope::from_vertices(pts);
      return p.translated(-p.vertex_centroid());
    } catch (const ComputeError&) {
    }
  }
}

/// Convex polygon with vertices at sorted random angles.
inline Polytope random_polygon(std::mt19937_64& rng, int k) {
  std::uniform_real_distribution<double> ang(0.0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> r(0.7, 1.3);
  while (true) {
    std::vector<Vec> pts;
    for (int i = 0; i < k; ++i) {
      const double t = ang(rng);
      const double rr = r(rng);
      Vec p(2);
      p << rr * std::cos(t), rr * std::sin(t);
      pts.push_back(p);
    }
    try {
      auto p = Polytope::from_vertices(pts);
      if (p.vertices().size() >= 3) return p.translated(-p.vertex_centroid());
    } catch (const ComputeError&) {
    }
  }
}

/// Origin-symmetric polygon: hull of +-p for random p.
inline Polytope random_symmetric_polygon(std::mt19937_64& rng, int half_count) {
  while (true) {
    std::vector<Vec> pts;
    for (int i = 0; i < half_count; ++i) {
      Vec p = unit_vec(rng, 2) * std::uniform_real_distribution<double>(0.5, 1.5)(rng);
      pts.push_back(p);
      pts.push_back(-p);
    }
    try {
      return Polytope::from_vertices(pts);
    } catch (const ComputeError&) {
    }
  }
}

/// Random simplex with a reasonable aspect ratio.
inline Polytope random_simplex(std::mt19937_64& rng, int d) {
  while (true) {
    std::vector<Vec> pts;
    for (int i = 0; i <= d; ++i) pts.push_back(gaussian_vec(rng, d));
    Mat edges(d, d);
    for (int i = 0; i < d; ++i) edges.col(i) = pts[static_cast<size_t>(i + 1)] - pts[0];
    const Eigen::JacobiSVD<Mat> svd(edges);
    if (svd.singularValues()(d - 1) < 0.15 * svd.singularValues()(0)) continue;
    auto p = Polytope::from_vertices(pts);
    return p.translated(-p.vertex_centroid());
  }
}

inline Mat random_invertible(std::mt19937_64& rng, int d) {
  while (true) {
    Mat A(d, d);
    for (int i = 0; i < d; ++i) A.row(i) = gaussian_vec(rng, d).transpose();
    const Eigen::JacobiSVD<Mat> svd(A);
    const auto& s = svd.singularValues();
    if (s(d - 1) > 0.2 * s(0)) return A;
  }
}

}  // namespace nonsep::testing
