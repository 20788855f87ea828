#pragma once

#include "nonsep/polytope.hpp"

#include <cstdint>
#include <vector>

namespace nonsep {

using Cell = std::vector<std::int64_t>;

/// Unit cubes offset + [0,1]^d at distinct integer offsets.
struct IntegerCubeFamily {
  int d = 2;
  std::vector<Cell> offsets;

  int size() const { return static_cast<int>(offsets.size()); }
  /// Throws InputError on an empty family, wrong offset length or repeated offsets.
  void validate() const;
};

/// Occupied slabs along every axis form one run of consecutive integers.
bool cube_is_wns(const IntegerCubeFamily& f);

/// Smallest axis-parallel box [lo, hi] containing the union.
struct IntBox {
  Cell lo;
  Cell hi;
  std::int64_t extent(int j) const { return hi[static_cast<size_t>(j)] - lo[static_cast<size_t>(j)]; }
};

IntBox bounding_box(const IntegerCubeFamily& f);

/// All 2^d corners of every cube.
std::vector<Vec> cube_corners(const IntegerCubeFamily& f);

struct HullMetrics {
  std::int64_t doubled_area = 0;  ///< exact
  double area = 0.0;
  double perimeter = 0.0;
};

/// Planar hull of the union: area by the shoelace formula in integers.
HullMetrics hull_metrics(const IntegerCubeFamily& f);

/// Hull measure used as an objective: area/perimeter for d = 2, volume for d <= 3.
double hull_objective(const IntegerCubeFamily& f, Measure objective);

/// Four corner squares glued to the sides of [1,n-1]^2 plus n-4 squares on
/// the diagonal. Requires n >= 4.
IntegerCubeFamily construct_extremal(int n);

inline std::int64_t extremal_area(int n) { return static_cast<std::int64_t>(n) * n - 2 * n + 4; }
double extremal_perimeter(int n);

struct ShadowStep {
  int axis = 0;
  int cube = 0;
  std::int64_t from = 0;
  std::int64_t to = 0;
  double before = 0.0;
  double after = 0.0;
};

struct ShadowResult {
  IntegerCubeFamily family;   ///< translated so the box starts at the origin
  std::vector<ShadowStep> steps;
  bool full_box = false;      ///< every axis extent equals n
};

/// Greedy shadow-system moves: while an axis is shorter than n, slide one cube
/// of a doubly occupied slab to the end of the box that maximizes the
/// objective. Every step is checked to keep WNS and not lose objective.
ShadowResult shadow_normalize(const IntegerCubeFamily& f, Measure objective);

struct CubeSearchResult {
  IntegerCubeFamily best;
  double value = 0.0;
  std::int64_t doubled_area = 0;
  std::uint64_t subsets = 0;     ///< placements enumerated
  std::uint64_t evaluated = 0;   ///< WNS dihedral representatives scored
};

/// Maximizes the planar hull objective over WNS placements of n cells in the
/// grid x grid box (grid defaults to n). Ties go to the lexicographically
/// smallest offset list. Requires 4 <= n <= 6.
CubeSearchResult exhaustive_max(int n, Measure objective, int grid = 0);

namespace serial {
CubeSearchResult exhaustive_max(int n, Measure objective, int grid = 0);
}

}  // namespace nonsep
