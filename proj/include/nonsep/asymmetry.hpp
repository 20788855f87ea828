#pragma once

#include "nonsep/polytope.hpp"

#include <optional>

namespace nonsep {

enum class SigmaMethod { lp, bisection };

struct AsymmetryResult {
  double sigma = 1.0;
  Vec center;  ///< a Minkowski center q: P - q is inside -sigma (P - q)
  SigmaMethod method = SigmaMethod::lp;
};

/// Minkowski asymmetry from one LP in (r, mu) with r = (1 + mu) q.
AsymmetryResult sigma_lp(const Polytope& p);

/// Same quantity by bisection on mu in [1, d], one feasibility LP in q per step.
AsymmetryResult sigma_bisection(const Polytope& p, double width = 1e-10);

struct PolarSigmaCheck {
  bool pass = false;
  double sigma = 1.0;        ///< from sigma_lp
  double polar_ratio = 1.0;  ///< smallest mu with (P-q)^o inside -mu (P-q)^o
};

/// Recentres at the LP centre, builds the polar and checks P^o in -sigma P^o.
PolarSigmaCheck polar_sigma_check(const Polytope& p);

struct BmBound {
  double eps = 0.0;  ///< max(0, d - sigma)
  bool applicable = false;
  std::optional<double> bound;  ///< 1 + 8(d+1) eps when eps < 1/(8(1+d))
};

BmBound bm_bound_report(const Polytope& p);
BmBound bm_bound_from_sigma(int d, double sigma);

}  // namespace nonsep
