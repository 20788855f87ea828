#pragma once

#include "nonsep/asymmetry.hpp"
#include "nonsep/family.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nonsep {

/// A translate t + lambda * T * base, T the total ratio of the family.
struct CoverResult {
  Vec t;
  double lambda = 1.0;
  bool certified = false;
};

template <class T>
struct IntervalCover {
  T center;
  T half_width;
};

/// One interval of half-width sum(tau_i) centred at the weighted mean covers
/// a connected union of intervals [x_i - tau_i, x_i + tau_i]. Works for any
/// ordered field (double, rationals). Throws InputError("not non-separable")
/// when the union has a gap larger than `gap_tol`.
template <class T>
IntervalCover<T> cover_intervals(const std::vector<std::pair<T, T>>& intervals, T gap_tol = T(0)) {
  if (intervals.empty()) throw InputError("cover_intervals: no intervals");
  std::vector<std::pair<T, T>> iv;  // (lo, hi)
  T sum_tau(0), sum_x(0);
  for (const auto& [x, tau] : intervals) {
    if (!(tau > T(0))) throw InputError("cover_intervals: half-width must be positive");
    iv.emplace_back(x - tau, x + tau);
    sum_tau += tau;
    sum_x += tau * x;
  }
  std::sort(iv.begin(), iv.end());
  T reach = iv.front().second;
  for (const auto& [lo, hi] : iv) {
    if (lo > reach + gap_tol) throw InputError("not non-separable");
    if (hi > reach) reach = hi;
  }
  return {sum_x / sum_tau, sum_tau};
}

/// Checks every member against t + lambda*T*base through support values on the
/// facet normals of the base.
bool certify_cover(const HomotheticFamily& f, const Vec& t, double lambda);

/// Weighted-centre cover with lambda = 1; base must be centrally symmetric
/// (about its vertex centroid) and the family WNS.
CoverResult weighted_cover(const HomotheticFamily& f);

/// Exact smallest covering ratio by LP in (t, lambda).
CoverResult lambda_min(const HomotheticFamily& f);

/// Cover with lambda = (sigma + 1)/2 at the weighted centre taken with the
/// base recentred at a Minkowski centre. Requires a WNS family.
CoverResult sigma_cover(const HomotheticFamily& f);
CoverResult sigma_cover(const HomotheticFamily& f, const AsymmetryResult& asym);

struct SummandResult {
  bool summand = true;
  std::optional<Vec> failing_direction;
  std::optional<std::pair<int, int>> failing_edge;  ///< vertex indices of Q
};

/// Tests whether Q slides freely in K through the edge criterion: for each
/// edge E of Q and directions u in the relative interior of its normal cone,
/// the face of K in direction u must contain a translate of E.
SummandResult is_summand(const Polytope& q, const Polytope& k);

struct WipSummandReport {
  bool summand = false;
  double lambda = 0.0;
  SummandResult detail;
};

/// Hull of the family against T * base, plus the exact covering ratio.
WipSummandReport wip_summand_check(const HomotheticFamily& f);

struct LutwakResult {
  bool consistent = true;
  bool all_simplices = true;  ///< every circumscribed simplex holds a translate of K
  bool direct = true;         ///< P holds a translate of K
  int simplices = 0;
};

/// Compares "each circumscribed simplex of P contains a translate of K" with
/// "P contains a translate of K". P must be generic with the origin inside.
LutwakResult lutwak_check(const Polytope& p, const Polytope& k);

}  // namespace nonsep
