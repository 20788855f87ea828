#pragma once

#include "nonsep/types.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace nonsep {

/// Closed halfspace {x : <a, x> <= b}; `a` has unit length once it lives in a Polytope.
struct Halfspace {
  Vec a;
  double b = 0.0;
};

/// Bounded, full-dimensional convex polytope carrying both representations.
///
/// Facet normals are unit vectors, every listed facet is a genuine
/// (d-1)-face and every listed vertex is extreme. Instances are immutable;
/// the transforming members return new polytopes.
class Polytope {
 public:
  /// Complete from an H-representation. Redundant and duplicate inequalities
  /// are dropped. Throws ComputeError("unbounded") or
  /// ComputeError("not full-dimensional").
  static Polytope from_facets(std::vector<Halfspace> facets, const Tolerance& tol = {});

  /// Complete from a point cloud (non-extreme points are discarded).
  static Polytope from_vertices(std::vector<Vec> points, const Tolerance& tol = {});

  int dim() const { return dim_; }
  const std::vector<Halfspace>& facets() const { return facets_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const Tolerance& tol() const { return tol_; }

  /// Incidence threshold scaled to the coordinate magnitude of this polytope.
  double eps() const { return eps_; }

  double support(const Vec& u) const;
  bool contains(const Vec& x) const;
  Vec vertex_centroid() const;

  /// Facet indices tight at vertex `v`.
  const std::vector<int>& vertex_facets(int v) const { return incidence_[static_cast<size_t>(v)]; }

  /// Vertex index pairs of the 1-dimensional faces.
  std::vector<std::pair<int, int>> edges() const;

  /// Vertices v with <u, v> >= support(u) - eps.
  std::vector<int> face(const Vec& u) const;

  bool is_origin_symmetric() const;

  Polytope translated(const Vec& t) const;
  Polytope scaled(double s) const;
  Polytope affine_image(const Mat& A, const Vec& b) const;

  /// Checks the dual-representation invariants; returns an empty string when
  /// they hold, otherwise a description of the first violation.
  std::string invariant_violation() const;

 private:
  Polytope(int dim, std::vector<Halfspace> facets, std::vector<Vec> vertices, const Tolerance& tol);
  void build_incidence();

  int dim_ = 0;
  std::vector<Halfspace> facets_;
  std::vector<Vec> vertices_;
  std::vector<std::vector<int>> incidence_;
  Tolerance tol_;
  double eps_ = 0.0;

  friend Polytope polar(const Polytope& p);
};

/// max over vertices of <u, v>. Throws InputError for a zero direction.
double support(const Polytope& p, const Vec& u);

Polytope vertices_from_facets(std::vector<Halfspace> facets, const Tolerance& tol = {});
Polytope facets_from_vertices(std::vector<Vec> vertices, const Tolerance& tol = {});

struct TranslateContainment {
  bool contained = false;
  std::optional<Vec> translation;  ///< t with t + inner inside outer, when contained
  double margin = 0.0;             ///< largest uniform slack achievable (negative when not contained)
};

/// Decides whether some translate of `inner` fits in `outer` (LP over t).
TranslateContainment contains_translate(const Polytope& outer, const Polytope& inner);

/// Polar body {x : <x, y> <= 1 for all y in P}. Requires the origin in the interior.
Polytope polar(const Polytope& p);

/// True iff every d facet normals are linearly independent.
bool is_generic(const Polytope& p);

struct GenericizeResult {
  Polytope polytope;
  double max_angle = 0.0;  ///< largest rotation applied to a normal (radians)
  double c = 0.0;          ///< P' lies in (1 + c*eps) P
  int attempts = 0;
};

/// Rotates every facet normal by at most `eps` radians and refits offsets so
/// that the result contains P and is generic. Deterministic in `seed`.
GenericizeResult genericize(const Polytope& p, double eps, std::uint64_t seed = 1);

/// All simplices cut out by d+1 facet halfspaces of a generic polytope.
std::vector<Polytope> circumscribed_simplices(const Polytope& p);

enum class Measure { volume, area, perimeter };

/// volume for d <= 3, area and perimeter for d = 2.
double measure(const Polytope& p, Measure kind);

/// Vertices of a planar polytope in counter-clockwise order.
std::vector<Vec> ccw_vertices(const Polytope& p);

}  // namespace nonsep
