#pragma once

#include "nonsep/types.hpp"

#include <vector>

namespace nonsep {

/// Euclidean balls p_i + tau_i B.
struct BallFamily {
  std::vector<Vec> centers;
  std::vector<double> radii;

  int size() const { return static_cast<int>(centers.size()); }
  int dim() const { return centers.empty() ? 0 : static_cast<int>(centers[0].size()); }
  double total_radius() const;
  void validate() const;
};

struct Circumball {
  Vec center;
  double radius = 0.0;
  std::vector<int> support;   ///< balls internally tangent to the answer
};

/// Smallest ball containing every member, i.e. min_c max_i |c - p_i| + tau_i.
/// Exact: every support set of at most d+1 balls is solved in closed form and
/// the smallest enclosing candidate is certified by a zero-in-hull LP on the
/// active gradients. At most 16 balls.
Circumball ball_circumradius(const BallFamily& f, double tol = 1e-9);

/// Planar bent chain: p_2 at height delta above the line through p_1 and
/// p_n, p_2..p_n collinear at touching distances, p_1 touching p_2.
BallFamily stability_construction(const std::vector<double>& taus, double delta);

/// Largest distance from a center to the total-least-squares line of all centers.
double line_deviation(const std::vector<Vec>& pts);

struct StabilityRow {
  double delta = 0.0;
  double eps = 0.0;        ///< sum of radii minus circumradius
  double deviation = 0.0;
  bool used = false;       ///< eps above the degeneracy floor
};

struct StabilityFit {
  std::vector<StabilityRow> rows;
  double deviation_slope = 0.0;   ///< log deviation against log eps
  double eps_slope = 0.0;         ///< log eps against log delta
};

inline constexpr double kEpsFloor = 1e-12;

/// Needs at least 5 deltas spanning two decades and 3 rows with eps above
/// the floor.
StabilityFit stability_exponent(const std::vector<double>& taus, const std::vector<double>& deltas);

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

struct CubeChainReport {
  std::vector<Vec> centers;
  double circumradius = 0.0;   ///< edge of the smallest containing axis cube
  double eps = 0.0;
  double deviation = 0.0;
  bool ns = false;
};

/// n unit squares in a zigzag (k, k mod 2): corner-touching, box n x 2, so
/// the containing cube has edge n while the centers are not collinear.
CubeChainReport cube_chain_counterexample(int n);

}  // namespace nonsep
