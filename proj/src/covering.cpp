#include "nonsep/covering.hpp"

#include "nonsep/combinatorics.hpp"
#include "nonsep/lp.hpp"
#include "nonsep/separability.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace nonsep {
namespace {

double family_scale(const HomotheticFamily& f) {
  double s = 1.0;
  for (const auto& m : f.members()) s = std::max(s, m.x.cwiseAbs().maxCoeff() + m.tau);
  for (const auto& v : f.base().vertices()) s = std::max(s, v.cwiseAbs().maxCoeff() * f.total_ratio());
  return s;
}

void require_wns(const HomotheticFamily& f) {
  if (!is_wns(f).wns) throw InputError("family is not weakly non-separable");
}

CoverResult finish(const HomotheticFamily& f, Vec t, double lambda) {
  CoverResult r{std::move(t), lambda, false};
  r.certified = certify_cover(f, r.t, r.lambda);
  return r;
}

// Segment of length `len` along unit `e` inside conv(face)?
bool face_holds_segment(const Polytope& k, const std::vector<int>& face, const Vec& e, double len) {
  const int d = k.dim();
  const int m = static_cast<int>(face.size());
  if (m < 2) return false;
  LinearProgram lp(2 * m);
  lp.set_all_nonnegative();
  for (int j = 0; j < d; ++j) {
    Vec row(2 * m);
    for (int i = 0; i < m; ++i) {
      const double c = k.vertices()[static_cast<size_t>(face[static_cast<size_t>(i)])](j);
      row(i) = c;
      row(m + i) = -c;
    }
    lp.add_constraint(row, Relation::eq, len * e(j));
  }
  Vec wa = Vec::Zero(2 * m);
  wa.head(m).setOnes();
  lp.add_constraint(wa, Relation::eq, 1.0);
  Vec wb = Vec::Zero(2 * m);
  wb.tail(m).setOnes();
  lp.add_constraint(wb, Relation::eq, 1.0);
  lp.set_objective(Vec::Zero(2 * m));
  return solve_lp(lp, k.tol()).status == LpStatus::optimal;
}

}  // namespace

bool certify_cover(const HomotheticFamily& f, const Vec& t, double lambda) {
  const double T = f.total_ratio();
  const double slack = f.base().tol().lp * family_scale(f);
  for (const auto& h : f.base().facets()) {
    const double cover = h.a.dot(t) + lambda * T * h.b;
    for (const auto& m : f.members()) {
      if (h.a.dot(m.x) + m.tau * h.b > cover + slack) return false;
    }
  }
  return true;
}

CoverResult weighted_cover(const HomotheticFamily& f) {
  const Vec c = f.base().vertex_centroid();
  const auto g = f.recentred(c);
  if (!g.base().is_origin_symmetric()) throw InputError("requires symmetric base");
  require_wns(f);
  const Vec t = g.weighted_center() - f.total_ratio() * c;
  return finish(f, t, 1.0);
}

CoverResult lambda_min(const HomotheticFamily& f) {
  const int d = f.dim();
  const Vec c = f.base().vertex_centroid();
  const auto g = f.recentred(c);
  const double T = g.total_ratio();
  // min lambda  s.t.  max_k (<a_i, x_k> + tau_k b_i) <= <a_i, t> + lambda T b_i
  LinearProgram lp(d + 1);
  for (const auto& h : g.base().facets()) {
    double need = -std::numeric_limits<double>::infinity();
    for (const auto& m : g.members()) need = std::max(need, h.a.dot(m.x) + m.tau * h.b);
    Vec row(d + 1);
    row.head(d) = -h.a;
    row(d) = -T * h.b;
    lp.add_constraint(row, Relation::le, -need);
  }
  Vec obj = Vec::Zero(d + 1);
  obj(d) = 1.0;
  lp.set_objective(obj, Sense::minimize);
  const auto r = solve_lp(lp, f.base().tol());
  if (r.status != LpStatus::optimal) throw ComputeError("lambda_min: LP failed");
  const double lambda = r.x(d);
  return finish(f, Vec(r.x.head(d) - lambda * T * c), lambda);
}

CoverResult sigma_cover(const HomotheticFamily& f) { return sigma_cover(f, sigma_lp(f.base())); }

CoverResult sigma_cover(const HomotheticFamily& f, const AsymmetryResult& asym) {
  require_dim(asym.center, f.dim(), "Minkowski centre");
  require_wns(f);
  const auto g = f.recentred(asym.center);
  const double lambda = 0.5 * (asym.sigma + 1.0);
  const Vec t = g.weighted_center() - lambda * f.total_ratio() * asym.center;
  return finish(f, t, lambda);
}

SummandResult is_summand(const Polytope& q, const Polytope& k) {
  if (q.dim() != k.dim()) throw InputError("is_summand: dimension mismatch");
  if (q.dim() < 2) throw InputError("is_summand needs d >= 2");
  const int d = q.dim();
  std::uint64_t idx = 0;
  for (const auto& [i, j] : q.edges()) {
    const Vec& x = q.vertices()[static_cast<size_t>(i)];
    const Vec& y = q.vertices()[static_cast<size_t>(j)];
    const double len = (y - x).norm();
    if (len <= q.eps()) throw ComputeError("is_summand: degenerate edge");
    const Vec e = (y - x) / len;
    // facets through the edge generate its normal cone
    std::vector<Vec> gens;
    for (int fi : q.vertex_facets(i)) {
      const auto& vf = q.vertex_facets(j);
      if (std::find(vf.begin(), vf.end(), fi) != vf.end()) gens.push_back(q.facets()[static_cast<size_t>(fi)].a);
    }
    Vec sum = Vec::Zero(d);
    for (const auto& g : gens) sum += g;
    std::vector<Vec> dirs{sum};
    for (const auto& g : gens) dirs.push_back(sum + 2.0 * g);
    auto rng = stream_rng(0x5eed, idx++);
    std::uniform_real_distribution<double> w(0.05, 1.0);
    for (int s = 0; s < 4 && gens.size() > 2; ++s) {
      Vec u = Vec::Zero(d);
      for (const auto& g : gens) u += w(rng) * g;
      dirs.push_back(u);
    }
    for (auto u : dirs) {
      u.normalize();
      if (!face_holds_segment(k, k.face(u), e, len * (1.0 - 1e-9))) {
        return {false, u, std::make_pair(i, j)};
      }
    }
  }
  return {};
}

WipSummandReport wip_summand_check(const HomotheticFamily& f) {
  WipSummandReport r;
  r.detail = is_summand(f.hull(), f.base().scaled(f.total_ratio()));
  r.summand = r.detail.summand;
  r.lambda = lambda_min(f).lambda;
  return r;
}

LutwakResult lutwak_check(const Polytope& p, const Polytope& k) {
  if (p.dim() != k.dim()) throw InputError("lutwak_check: dimension mismatch");
  if (!is_generic(p)) throw InputError("P is not generic (genericize first)");
  for (const auto& h : p.facets()) {
    if (h.b <= p.eps()) throw InputError("origin not interior to P");
  }
  LutwakResult r;
  r.direct = contains_translate(p, k).contained;
  const auto sims = circumscribed_simplices(p);
  r.simplices = static_cast<int>(sims.size());
  for (const auto& s : sims) {
    if (!contains_translate(s, k).contained) {
      r.all_simplices = false;
      break;
    }
  }
  r.consistent = r.all_simplices == r.direct;
  return r;
}

}  // namespace nonsep
