#include "nonsep/separability.hpp"

#include "nonsep/combinatorics.hpp"
#include "nonsep/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace nonsep {
namespace {

struct Row {
  Vec a;
  double b;
};

Vec canonical_sign(Vec u) {
  for (Eigen::Index j = 0; j < u.size(); ++j) {
    if (std::abs(u(j)) > 1e-12) {
      if (u(j) < 0) u = -u;
      break;
    }
  }
  return u;
}

// Orthonormal basis of the complement of unit u.
Mat complement_basis(const Vec& u) {
  const auto d = u.size();
  const Mat um = u;
  Eigen::HouseholderQR<Mat> qr(um);
  const Mat q = qr.householderQ();
  return q.rightCols(d - 1);
}

// Closed segment parameters t in [0,1] for which a + t(b-a) lies in the
// polytope given by rows (each relaxed by slack). Empty when lo > hi.
Interval clip_segment(const std::vector<Halfspace>& rows, const Vec& a, const Vec& dir, double slack) {
  double lo = 0.0, hi = 1.0;
  for (const auto& h : rows) {
    const double c = h.a.dot(dir);
    const double r = h.b + slack - h.a.dot(a);
    if (std::abs(c) < 1e-15) {
      if (r < 0) return {1.0, 0.0};
      continue;
    }
    if (c > 0) hi = std::min(hi, r / c);
    else lo = std::max(lo, r / c);
  }
  return {lo, hi};
}

// Is there a common point of conv(side A) and conv(side B)?
bool hulls_meet(const std::vector<Vec>& a, const std::vector<Vec>& b, int d, const Tolerance& tol) {
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  LinearProgram lp(na + nb);
  lp.set_all_nonnegative();
  for (int j = 0; j < d; ++j) {
    Vec row(na + nb);
    for (int i = 0; i < na; ++i) row(i) = a[static_cast<size_t>(i)](j);
    for (int i = 0; i < nb; ++i) row(na + i) = -b[static_cast<size_t>(i)](j);
    lp.add_constraint(row, Relation::eq, 0.0);
  }
  Vec wa = Vec::Zero(na + nb);
  wa.head(na).setOnes();
  lp.add_constraint(wa, Relation::eq, 1.0);
  Vec wb = Vec::Zero(na + nb);
  wb.tail(nb).setOnes();
  lp.add_constraint(wb, Relation::eq, 1.0);
  lp.set_objective(Vec::Zero(na + nb));
  return solve_lp(lp, tol).status == LpStatus::optimal;
}

bool split_separable(const HomotheticFamily& f, const std::vector<std::vector<Vec>>& verts, std::uint64_t mask) {
  std::vector<Vec> a, b;
  for (int i = 0; i < f.size(); ++i) {
    auto& side = (i == 0 || ((mask >> (i - 1)) & 1U)) ? a : b;
    side.insert(side.end(), verts[static_cast<size_t>(i)].begin(), verts[static_cast<size_t>(i)].end());
  }
  return !hulls_meet(a, b, f.dim(), f.base().tol());
}

NsResult ns_from_mask(const HomotheticFamily& f, std::uint64_t mask) {
  NsResult r;
  r.ns = false;
  r.part.push_back(0);
  for (int i = 1; i < f.size(); ++i) {
    if ((mask >> (i - 1)) & 1U) r.part.push_back(i);
  }
  return r;
}

std::vector<std::vector<Vec>> member_vertex_lists(const HomotheticFamily& f) {
  if (f.size() > kMaxNsMembers) throw InputError("use sampled NS check");
  std::vector<std::vector<Vec>> verts;
  for (int i = 0; i < f.size(); ++i) verts.push_back(f.member_vertices(i));
  return verts;
}

struct SampleContext {
  const HomotheticFamily* family;
  Polytope hull;
  Vec lo, hi;
  std::vector<std::vector<Halfspace>> members;
  double slack;
  int k;
};

SampleContext make_context(const HomotheticFamily& f, int k) {
  SampleContext ctx{&f, f.hull(), {}, {}, {}, 0.0, k};
  const int d = f.dim();
  ctx.lo = Vec::Constant(d, std::numeric_limits<double>::infinity());
  ctx.hi = -ctx.lo;
  for (const auto& v : ctx.hull.vertices()) {
    ctx.lo = ctx.lo.cwiseMin(v);
    ctx.hi = ctx.hi.cwiseMax(v);
  }
  double eps = ctx.hull.eps();
  for (int i = 0; i < f.size(); ++i) {
    const auto m = f.member_polytope(i);
    ctx.members.push_back(m.facets());
    eps = std::max(eps, m.eps());
  }
  ctx.slack = 10 * eps;
  return ctx;
}

bool misses_rows(const Flat& flat, const std::vector<Halfspace>& rows, double slack) {
  const auto k = flat.basis.cols();
  if (k == 0) {
    for (const auto& h : rows) {
      if (h.a.dot(flat.point) > h.b + slack) return true;
    }
    return false;
  }
  if (k == 1) {
    const Vec e = flat.basis.col(0);
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (const auto& h : rows) {
      const double c = h.a.dot(e);
      const double r = h.b + slack - h.a.dot(flat.point);
      if (std::abs(c) < 1e-15) {
        if (r < 0) return true;
        continue;
      }
      if (c > 0) hi = std::min(hi, r / c);
      else lo = std::max(lo, r / c);
    }
    return lo > hi;
  }
  LinearProgram lp(static_cast<int>(k));
  for (const auto& h : rows) {
    lp.add_constraint(flat.basis.transpose() * h.a, Relation::le, h.b + slack - h.a.dot(flat.point));
  }
  lp.set_objective(Vec::Zero(k));
  return solve_lp(lp).status == LpStatus::infeasible;
}

// Sample i. Returns the flat when it meets the hull but misses every member.
std::optional<Flat> draw_sample(const SampleContext& ctx, std::uint64_t seed, std::int64_t i) {
  auto rng = stream_rng(seed, static_cast<std::uint64_t>(i));
  const auto& base = ctx.family->base();
  const int d = base.dim();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss;

  Vec p(d);
  bool inside = false;
  for (int attempt = 0; attempt < 10000 && !inside; ++attempt) {
    for (int j = 0; j < d; ++j) p(j) = ctx.lo(j) + unit(rng) * (ctx.hi(j) - ctx.lo(j));
    inside = ctx.hull.contains(p);
  }
  if (!inside) throw ComputeError("hull sampling failed");

  const auto nf = base.facets().size();
  const auto fi = std::uniform_int_distribution<size_t>(0, nf - 1)(rng);
  const Vec& u = base.facets()[fi].a;
  Mat basis(d, ctx.k);
  for (int c = 0; c < ctx.k; ++c) {
    while (true) {
      Vec g(d);
      for (int j = 0; j < d; ++j) g(j) = gauss(rng);
      g -= u.dot(g) * u;
      for (int q = 0; q < c; ++q) g -= basis.col(q).dot(g) * basis.col(q);
      const double n = g.norm();
      if (n > 1e-8) {
        basis.col(c) = g / n;
        break;
      }
    }
  }
  Flat flat{p, basis};
  for (const auto& rows : ctx.members) {
    if (!misses_rows(flat, rows, ctx.slack)) return std::nullopt;
  }
  return flat;
}

std::optional<KwipResult> kwip_exact_or_check(const HomotheticFamily& f, int k, std::int64_t samples) {
  const int d = f.dim();
  if (k < 0 || k > d - 1) throw InputError("k must lie in [0, d-1]");
  if (samples < 1) throw InputError("samples must be positive");
  if (k != d - 1) return std::nullopt;
  KwipResult r;
  const auto w = is_wns(f);
  if (!w.wns) {
    r.falsified = true;
    r.witness = Flat{w.witness->direction * w.witness->offset, complement_basis(w.witness->direction)};
  }
  return r;
}

}  // namespace

Interval project_member(const HomotheticFamily& f, int i, const Vec& u) {
  const auto& m = f.member(i);
  require_dim(u, f.dim(), "projection direction");
  const double c = u.dot(m.x);
  return {c - m.tau * f.base().support(-u), c + m.tau * f.base().support(u)};
}

std::vector<Vec> canonical_normals(const Polytope& p) {
  std::vector<Vec> out;
  for (const auto& h : p.facets()) {
    const Vec u = canonical_sign(h.a);
    bool dup = false;
    for (const auto& v : out) dup = dup || (u - v).cwiseAbs().maxCoeff() <= 1e-9;
    if (!dup) out.push_back(u);
  }
  return out;
}

WnsResult is_wns(const HomotheticFamily& f) {
  WnsResult out;
  const double tol = f.base().tol().gap;
  for (const auto& u : canonical_normals(f.base())) {
    std::vector<Interval> iv;
    for (int i = 0; i < f.size(); ++i) iv.push_back(project_member(f, i, u));
    std::sort(iv.begin(), iv.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    double reach = iv[0].hi;
    for (size_t j = 1; j < iv.size(); ++j) {
      if (iv[j].lo > reach + tol) {
        out.wns = false;
        out.witness = GapWitness{u, iv[j].lo - reach, 0.5 * (iv[j].lo + reach)};
        return out;
      }
      reach = std::max(reach, iv[j].hi);
    }
  }
  return out;
}

NsResult is_ns(const HomotheticFamily& f) {
  const auto verts = member_vertex_lists(f);
  // bit i-1 of a mask puts member i next to member 0; the all-ones mask is not a split
  const std::uint64_t total = (std::uint64_t{1} << (f.size() - 1)) - 1;
  constexpr std::uint64_t kBlock = 256;
  for (std::uint64_t start = 0; start < total; start += kBlock) {
    const std::uint64_t end = std::min(total, start + kBlock);
    std::uint64_t found = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel for schedule(dynamic) reduction(min : found)
    for (std::int64_t s = static_cast<std::int64_t>(start); s < static_cast<std::int64_t>(end); ++s) {
      const auto mask = static_cast<std::uint64_t>(s);
      if (split_separable(f, verts, mask)) found = std::min(found, mask);
    }
    if (found != std::numeric_limits<std::uint64_t>::max()) return ns_from_mask(f, found);
  }
  return {};
}

KwipResult is_kwip_sampled(const HomotheticFamily& f, int k, std::int64_t samples, std::uint64_t seed) {
  if (auto exact = kwip_exact_or_check(f, k, samples)) return *exact;
  const auto ctx = make_context(f, k);
  constexpr std::int64_t kBlock = 4096;
  KwipResult r;
  for (std::int64_t start = 0; start < samples; start += kBlock) {
    const std::int64_t end = std::min(samples, start + kBlock);
    std::int64_t found = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : found)
    for (std::int64_t i = start; i < end; ++i) {
      if (draw_sample(ctx, seed, i)) found = std::min(found, i);
    }
    if (found != std::numeric_limits<std::int64_t>::max()) {
      r.falsified = true;
      r.witness = draw_sample(ctx, seed, found);
      r.samples_used = found + 1;
      return r;
    }
  }
  r.samples_used = samples;
  return r;
}

bool flat_misses(const Flat& flat, const Polytope& p) {
  require_dim(flat.point, p.dim(), "flat point");
  if (flat.basis.rows() != p.dim()) throw InputError("flat basis: dimension mismatch");
  return misses_rows(flat, p.facets(), 10 * p.eps());
}

EdgeCoverResult edges_covered(const HomotheticFamily& f) {
  const int d = f.dim();
  if (d < 2) throw InputError("edges_covered needs d >= 2");
  if (d > 6 || (d >= 4 && f.all_vertices().size() > 512)) throw InputError("family too large for hull edges");
  const auto ctx = make_context(f, 1);
  const double gap_tol = f.base().tol().gap;
  EdgeCoverResult out;
  for (const auto& [i, j] : ctx.hull.edges()) {
    const Vec& a = ctx.hull.vertices()[static_cast<size_t>(i)];
    const Vec dir = ctx.hull.vertices()[static_cast<size_t>(j)] - a;
    const double len = dir.norm();
    std::vector<Interval> pieces;
    for (const auto& rows : ctx.members) {
      const auto c = clip_segment(rows, a, dir, ctx.slack);
      if (c.lo <= c.hi) pieces.push_back(c);
    }
    std::sort(pieces.begin(), pieces.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    double reach = 0.0;
    const double t_tol = gap_tol / len;
    for (const auto& pc : pieces) {
      if (pc.lo > reach + t_tol) break;
      reach = std::max(reach, pc.hi);
    }
    if (reach < 1.0 - t_tol) {
      // first uncovered stretch starts at `reach`; find where coverage resumes
      double resume = 1.0;
      for (const auto& pc : pieces) {
        if (pc.lo > reach) resume = std::min(resume, pc.lo);
      }
      out.covered = false;
      out.uncovered_point = Vec(a + 0.5 * (reach + resume) * dir);
      return out;
    }
  }
  return out;
}

namespace serial {

NsResult is_ns(const HomotheticFamily& f) {
  const auto verts = member_vertex_lists(f);
  const std::uint64_t total = (std::uint64_t{1} << (f.size() - 1)) - 1;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (split_separable(f, verts, mask)) return ns_from_mask(f, mask);
  }
  return {};
}

KwipResult is_kwip_sampled(const HomotheticFamily& f, int k, std::int64_t samples, std::uint64_t seed) {
  if (auto exact = kwip_exact_or_check(f, k, samples)) return *exact;
  const auto ctx = make_context(f, k);
  KwipResult r;
  for (std::int64_t i = 0; i < samples; ++i) {
    if (auto flat = draw_sample(ctx, seed, i)) {
      r.falsified = true;
      r.witness = std::move(flat);
      r.samples_used = i + 1;
      return r;
    }
  }
  r.samples_used = samples;
  return r;
}

}  // namespace serial
}  // namespace nonsep
