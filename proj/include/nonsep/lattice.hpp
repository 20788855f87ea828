#pragma once

#include "nonsep/polytope.hpp"

#include <cstdint>
#include <vector>

namespace nonsep {

/// Full-rank lattice B Z^d; basis vectors are the columns of B.
class Lattice {
 public:
  explicit Lattice(Mat basis, const Tolerance& tol = {});
  static Lattice integer(int d);

  int dim() const { return static_cast<int>(basis_.rows()); }
  const Mat& basis() const { return basis_; }
  double det() const { return det_; }
  Vec point(const Vec& coords) const { return basis_ * coords; }
  Vec coords(const Vec& x) const { return inverse_ * x; }
  const Mat& inverse() const { return inverse_; }

  /// Lattice points z with |z - centre| <= radius. Throws ComputeError when
  /// the coordinate box holds more than `limit` candidates.
  std::vector<Vec> points_in_ball(const Vec& centre, double radius, std::int64_t limit = 10'000'000) const;

 private:
  Mat basis_;
  Mat inverse_;
  double det_ = 0.0;
};

/// Basis B^{-T}.
Lattice dual_lattice(const Lattice& l);

struct LatticeArrangement {
  Polytope body;
  Lattice lattice;
};

/// vol(body) / det(lattice); d <= 3.
double density(const LatticeArrangement& a);

/// Gauge max(0, max_i <a_i, x> / b_i). Throws ComputeError("origin not interior").
double knorm(const Polytope& k, const Vec& x);

/// Exact Lipschitz constant of the gauge: max_i 1 / b_i.
double gauge_lipschitz(const Polytope& k);

struct Bracket {
  double lower = 0.0;
  double upper = 0.0;
  Vec witness;  ///< point attaining `lower`
  double width() const { return upper - lower; }
};

struct CoveringOptions {
  int grid = 16;            ///< initial cells per lattice-coordinate axis
  double width = 0.01;      ///< requested bracket width
  std::int64_t max_cells = 4'000'000;
};

/// Brackets the covering radius max_x min_z ||x - z||_K by branch and bound
/// over the fundamental cell. Throws ComputeError with the achieved bracket
/// if the cell budget runs out first.
Bracket covering_radius(const LatticeArrangement& a, const CoveringOptions& opt = {});

/// max(0, covering radius - 1); body must be centrally symmetric about the origin.
Bracket tightness(const LatticeArrangement& a, const CoveringOptions& opt = {});

struct LatticeNsResult {
  bool ns = false;
  double lambda1 = 0.0;  ///< min over nonzero dual vectors w of ||w||_{K polar}
  Vec shortest;
  double support_check = 0.0;  ///< h_K(shortest), equal to lambda1
};

/// Non-separability of L + K through the dual lattice: NS iff lambda1 >= 1/2.
LatticeNsResult is_ns_lattice(const LatticeArrangement& a);

struct PatchProbe {
  bool separable = false;
  Vec direction;
  double gap = 0.0;
};

/// Finite-patch probe: projects the translates z + K with lattice coordinates
/// in [-patch, patch]^2 onto primitive dual directions with small coordinates
/// and onto random directions, looking for a gap in the central quarter.
PatchProbe finite_patch_probe(const LatticeArrangement& a, int patch = 30, int dual_range = 8, int random_dirs = 200,
                              std::uint64_t seed = 1);

/// Largest circular gap of {<u, z> mod 1 : z in Z^d, |z|_inf <= R}.
double kronecker_gap(const Vec& u, int box_radius);

struct WeakMinimumRow {
  double t = 0.0;
  double hit_fraction = 0.0;  ///< sampled facet-parallel hyperplanes meeting L + tP
  double miss_margin = 0.0;   ///< max over facets of (largest gap of the projected patch - t * width)
};

struct WeakMinimumOptions {
  int window = 50;  ///< lattice coordinates in [-window, window]^d
  int samples = 10000;
  std::uint64_t seed = 1;
};

/// First weak covering minimum experiment: for every t, how many sampled
/// hyperplanes parallel to facets of P are met by L + tP, and by how much the
/// worst one can miss. Gaps are measured in the central half of the projected
/// patch, so the margin over-estimates the true value.
std::vector<WeakMinimumRow> weak_covering_minimum_1(const Polytope& p, const Lattice& l,
                                                    const std::vector<double>& t_grid,
                                                    const WeakMinimumOptions& opt = {});

namespace serial {
/// Plain grid evaluation with the Lipschitz upper bound; no refinement.
Bracket covering_radius_grid(const LatticeArrangement& a, int grid);
}  // namespace serial

/// Parallel version of the plain grid (benchmark counterpart).
Bracket covering_radius_grid(const LatticeArrangement& a, int grid);

}  // namespace nonsep
