#include "nonsep/asymmetry.hpp"

#include "nonsep/lp.hpp"

#include <cmath>

namespace nonsep {

AsymmetryResult sigma_lp(const Polytope& p) {
  const int d = p.dim();
  const Vec c = p.vertex_centroid();
  const auto k = p.translated(-c);
  // min mu  s.t.  <a_i, r> - mu b_i <= min_j <a_i, v_j>
  LinearProgram lp(d + 1);
  for (const auto& h : k.facets()) {
    Vec row(d + 1);
    row.head(d) = h.a;
    row(d) = -h.b;
    lp.add_constraint(row, Relation::le, -k.support(-h.a));
  }
  lp.set_nonnegative(d);
  Vec obj = Vec::Zero(d + 1);
  obj(d) = 1.0;
  lp.set_objective(obj, Sense::minimize);
  const auto r = solve_lp(lp, p.tol());
  if (r.status != LpStatus::optimal) throw ComputeError("sigma_lp: LP failed");
  const double mu = r.x(d);
  return {mu, Vec(r.x.head(d) / (1.0 + mu) + c), SigmaMethod::lp};
}

namespace {

// Max-slack feasibility of q for a fixed mu using every facet/vertex pair:
// (1 + mu) <a_i, q> - <a_i, v_j> <= mu b_i.
std::optional<Vec> center_for(const Polytope& k, double mu) {
  const int d = k.dim();
  LinearProgram lp(d + 1);
  for (const auto& h : k.facets()) {
    for (const auto& v : k.vertices()) {
      Vec row(d + 1);
      row.head(d) = (1.0 + mu) * h.a;
      row(d) = 1.0;
      lp.add_constraint(row, Relation::le, mu * h.b + h.a.dot(v));
    }
  }
  Vec cap = Vec::Zero(d + 1);
  cap(d) = 1.0;
  lp.add_constraint(cap, Relation::le, 1.0);
  lp.set_objective(cap);
  const auto r = solve_lp(lp, k.tol());
  if (r.status != LpStatus::optimal) throw ComputeError("sigma_bisection: LP failed");
  if (r.x(d) < -k.tol().lp) return std::nullopt;
  return Vec(r.x.head(d));
}

}  // namespace

AsymmetryResult sigma_bisection(const Polytope& p, double width) {
  const int d = p.dim();
  const Vec c = p.vertex_centroid();
  const auto k = p.translated(-c);
  double lo = 1.0, hi = static_cast<double>(d);
  auto best = center_for(k, hi);
  if (!best) throw ComputeError("sigma_bisection: infeasible at mu = d");
  if (auto at_one = center_for(k, lo)) return {1.0, Vec(*at_one + c), SigmaMethod::bisection};
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (auto q = center_for(k, mid)) {
      hi = mid;
      best = q;
    } else {
      lo = mid;
    }
  }
  return {hi, Vec(*best + c), SigmaMethod::bisection};
}

PolarSigmaCheck polar_sigma_check(const Polytope& p) {
  const auto s = sigma_lp(p);
  const auto k = p.translated(-s.center);
  const auto kp = polar(k);
  PolarSigmaCheck out;
  out.sigma = s.sigma;
  double ratio = 0.0;
  for (const auto& w : kp.vertices()) {
    for (const auto& h : kp.facets()) ratio = std::max(ratio, h.a.dot(-w) / h.b);
  }
  out.polar_ratio = ratio;
  // every polar vertex w has -w/sigma in the polar, and nothing smaller than sigma works
  const bool inside = ratio <= s.sigma * (1.0 + 1e-7);
  out.pass = inside && std::abs(ratio - s.sigma) <= 1e-6 * s.sigma;
  return out;
}

BmBound bm_bound_from_sigma(int d, double sigma) {
  BmBound b;
  b.eps = std::max(0.0, d - sigma);
  b.applicable = b.eps < 1.0 / (8.0 * (1 + d));
  if (b.applicable) b.bound = 1.0 + 8.0 * (d + 1) * b.eps;
  return b;
}

BmBound bm_bound_report(const Polytope& p) { return bm_bound_from_sigma(p.dim(), sigma_lp(p).sigma); }

}  // namespace nonsep
