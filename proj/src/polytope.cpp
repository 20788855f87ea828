#include "nonsep/polytope.hpp"

#include "nonsep/combinatorics.hpp"
#include "nonsep/lp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace nonsep {
namespace {

constexpr double kRankThreshold = 1e-10;

double coord_scale(const std::vector<Vec>& pts) {
  double s = 1.0;
  for (const auto& p : pts) s = std::max(s, p.cwiseAbs().maxCoeff());
  return s;
}

int rank_of(const Mat& m, double threshold = kRankThreshold) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::FullPivLU<Mat> lu(m);
  lu.setThreshold(threshold);
  return static_cast<int>(lu.rank());
}

int affine_rank(const std::vector<Vec>& pts, const std::vector<int>& idx, double scale) {
  if (idx.size() < 2) return 0;
  const auto d = pts[static_cast<size_t>(idx[0])].size();
  Mat m(static_cast<Eigen::Index>(idx.size()) - 1, d);
  for (size_t k = 1; k < idx.size(); ++k) {
    m.row(static_cast<Eigen::Index>(k) - 1) =
        (pts[static_cast<size_t>(idx[k])] - pts[static_cast<size_t>(idx[0])]).transpose() / scale;
  }
  return rank_of(m, 1e-9);
}

void append_unique_point(std::vector<Vec>& out, const Vec& p, double eps) {
  for (const auto& q : out) {
    if ((q - p).cwiseAbs().maxCoeff() <= eps) return;
  }
  out.push_back(p);
}

bool same_halfspace(const Halfspace& h, const Halfspace& g, double eps) {
  return (h.a - g.a).cwiseAbs().maxCoeff() <= 1e-9 && std::abs(h.b - g.b) <= eps;
}

void sort_points(std::vector<Vec>& pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec& x, const Vec& y) {
    return std::lexicographical_compare(x.data(), x.data() + x.size(), y.data(), y.data() + y.size());
  });
}

// LP-based boundedness/full-dimensionality screen for an H-representation.
void check_region(const std::vector<Halfspace>& facets, int d, const Tolerance& tol) {
  LinearProgram cheb(d + 1);
  for (const auto& h : facets) {
    Vec row(d + 1);
    row.head(d) = h.a;
    row(d) = 1.0;
    cheb.add_constraint(row, Relation::le, h.b);
  }
  Vec obj = Vec::Zero(d + 1);
  obj(d) = 1.0;
  cheb.set_objective(obj);
  const auto r = solve_lp(cheb, tol);
  if (r.status == LpStatus::unbounded) throw ComputeError("unbounded");
  if (r.status == LpStatus::infeasible || r.value <= tol.geom) {
    throw ComputeError("not full-dimensional");
  }
  for (int j = 0; j < d; ++j) {
    for (double s : {1.0, -1.0}) {
      LinearProgram lp(d);
      for (const auto& h : facets) lp.add_constraint(h.a, Relation::le, h.b);
      Vec c = Vec::Zero(d);
      c(j) = s;
      lp.set_objective(c);
      if (solve_lp(lp, tol).status == LpStatus::unbounded) throw ComputeError("unbounded");
    }
  }
}

// Removes points lying in the hull of the others (LP membership test).
std::vector<Vec> extreme_points(std::vector<Vec> pts, const Tolerance& tol) {
  const auto d = static_cast<int>(pts.front().size());
  for (size_t k = 0; k < pts.size();) {
    const int m = static_cast<int>(pts.size()) - 1;
    LinearProgram lp(m);
    lp.set_all_nonnegative();
    for (int j = 0; j < d; ++j) {
      Vec row(m);
      int c = 0;
      for (size_t i = 0; i < pts.size(); ++i) {
        if (i != k) row(c++) = pts[i](j);
      }
      lp.add_constraint(row, Relation::eq, pts[k](j));
    }
    lp.add_constraint(Vec::Ones(m), Relation::eq, 1.0);
    if (solve_lp(lp, tol).status == LpStatus::optimal) {
      pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      ++k;
    }
  }
  return pts;
}

}  // namespace

Polytope::Polytope(int dim, std::vector<Halfspace> facets, std::vector<Vec> vertices,
                   const Tolerance& tol)
    : dim_(dim), facets_(std::move(facets)), vertices_(std::move(vertices)), tol_(tol) {
  eps_ = tol_.geom * coord_scale(vertices_);
  build_incidence();
}

void Polytope::build_incidence() {
  incidence_.assign(vertices_.size(), {});
  for (size_t v = 0; v < vertices_.size(); ++v) {
    for (size_t f = 0; f < facets_.size(); ++f) {
      if (std::abs(facets_[f].a.dot(vertices_[v]) - facets_[f].b) <= 10 * eps_) {
        incidence_[v].push_back(static_cast<int>(f));
      }
    }
  }
}

Polytope Polytope::from_facets(std::vector<Halfspace> facets, const Tolerance& tol) {
  tol.validate();
  if (facets.empty()) throw InputError("no facets given");
  const auto d = static_cast<int>(facets.front().a.size());
  if (d < 1) throw InputError("dimension must be at least 1");
  double bscale = 1.0;
  for (auto& h : facets) {
    require_dim(h.a, d, "facet normal");
    if (!h.a.allFinite() || !std::isfinite(h.b)) throw InputError("non-finite facet data");
    const double n = h.a.norm();
    if (n <= 0.0) throw InputError("zero facet normal");
    h.a /= n;
    h.b /= n;
    bscale = std::max(bscale, std::abs(h.b));
  }
  check_region(facets, d, tol);

  const int m = static_cast<int>(facets.size());
  const double eps = tol.geom * bscale;
  std::vector<Vec> verts;
  if (m >= d) {
    std::vector<int> idx(static_cast<size_t>(d));
    std::iota(idx.begin(), idx.end(), 0);
    Mat A(d, d);
    Vec b(d);
    do {
      for (int r = 0; r < d; ++r) {
        A.row(r) = facets[static_cast<size_t>(idx[static_cast<size_t>(r)])].a.transpose();
        b(r) = facets[static_cast<size_t>(idx[static_cast<size_t>(r)])].b;
      }
      Eigen::FullPivLU<Mat> lu(A);
      lu.setThreshold(kRankThreshold);
      if (lu.rank() < d) continue;
      const Vec x = lu.solve(b);
      bool feasible = true;
      for (const auto& h : facets) {
        if (h.a.dot(x) > h.b + 10 * eps) { feasible = false; break; }
      }
      if (feasible) append_unique_point(verts, x, 100 * eps);
    } while (next_combination(idx, m));
  }
  if (static_cast<int>(verts.size()) < d + 1) throw ComputeError("not full-dimensional");
  sort_points(verts);

  const double veps = tol.geom * coord_scale(verts);
  std::vector<Halfspace> kept;
  for (const auto& h : facets) {
    std::vector<int> tight;
    for (size_t v = 0; v < verts.size(); ++v) {
      if (std::abs(h.a.dot(verts[v]) - h.b) <= 10 * veps) tight.push_back(static_cast<int>(v));
    }
    if (static_cast<int>(tight.size()) < d) continue;
    if (affine_rank(verts, tight, coord_scale(verts)) != d - 1) continue;
    bool dup = false;
    for (const auto& g : kept) dup = dup || same_halfspace(g, h, 10 * veps);
    if (!dup) kept.push_back(h);
  }
  return Polytope(d, std::move(kept), std::move(verts), tol);
}

Polytope Polytope::from_vertices(std::vector<Vec> points, const Tolerance& tol) {
  tol.validate();
  if (points.empty()) throw InputError("no vertices given");
  const auto d = static_cast<int>(points.front().size());
  if (d < 1) throw InputError("dimension must be at least 1");
  for (const auto& p : points) {
    require_dim(p, d, "vertex");
    if (!p.allFinite()) throw InputError("non-finite vertex coordinate");
  }
  const double scale = coord_scale(points);
  const double eps = tol.geom * scale;
  std::vector<Vec> pts;
  for (const auto& p : points) append_unique_point(pts, p, eps);
  std::vector<int> all(pts.size());
  std::iota(all.begin(), all.end(), 0);
  if (static_cast<int>(pts.size()) < d + 1 || affine_rank(pts, all, scale) < d) {
    throw ComputeError("not full-dimensional");
  }
  if (binomial(static_cast<int>(pts.size()), d) > 20000) pts = extreme_points(std::move(pts), tol);

  const int n = static_cast<int>(pts.size());
  std::vector<Halfspace> facets;
  auto consider = [&](const Vec& normal, double b) {
    double hi = -1e300, lo = 1e300;
    for (const auto& p : pts) {
      const double v = normal.dot(p) - b;
      hi = std::max(hi, v);
      lo = std::min(lo, v);
    }
    Halfspace h;
    if (hi <= 10 * eps) {
      h = {normal, b};
    } else if (lo >= -10 * eps) {
      h = {-normal, -b};
    } else {
      return;
    }
    for (const auto& g : facets) {
      if (same_halfspace(g, h, 100 * eps)) return;
    }
    facets.push_back(std::move(h));
  };

  if (d == 1) {
    Vec e = Vec::Ones(1);
    double lo = pts[0](0), hi = pts[0](0);
    for (const auto& p : pts) { lo = std::min(lo, p(0)); hi = std::max(hi, p(0)); }
    facets.push_back({e, hi});
    facets.push_back({-e, -lo});
  } else {
    std::vector<int> idx(static_cast<size_t>(d));
    std::iota(idx.begin(), idx.end(), 0);
    Mat m(d - 1, d);
    do {
      const Vec& p0 = pts[static_cast<size_t>(idx[0])];
      for (int r = 1; r < d; ++r) {
        m.row(r - 1) = (pts[static_cast<size_t>(idx[static_cast<size_t>(r)])] - p0).transpose() / scale;
      }
      Eigen::FullPivLU<Mat> lu(m);
      lu.setThreshold(1e-9);
      if (lu.rank() != d - 1) continue;
      Vec normal = lu.kernel().col(0);
      normal.normalize();
      consider(normal, normal.dot(p0));
    } while (next_combination(idx, n));
  }

  // Extreme points are those whose tight normals have full rank.
  std::vector<Vec> verts;
  for (const auto& p : pts) {
    std::vector<Vec> normals;
    for (const auto& h : facets) {
      if (std::abs(h.a.dot(p) - h.b) <= 10 * eps) normals.push_back(h.a);
    }
    Mat nm(static_cast<Eigen::Index>(normals.size()), d);
    for (size_t k = 0; k < normals.size(); ++k) nm.row(static_cast<Eigen::Index>(k)) = normals[k].transpose();
    if (rank_of(nm, 1e-9) == d) verts.push_back(p);
  }
  sort_points(verts);
  return Polytope(d, std::move(facets), std::move(verts), tol);
}

double Polytope::support(const Vec& u) const {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : vertices_) best = std::max(best, u.dot(v));
  return best;
}

bool Polytope::contains(const Vec& x) const {
  require_dim(x, dim_, "point");
  for (const auto& h : facets_) {
    if (h.a.dot(x) > h.b + 10 * eps_) return false;
  }
  return true;
}

Vec Polytope::vertex_centroid() const {
  Vec c = Vec::Zero(dim_);
  for (const auto& v : vertices_) c += v;
  return c / static_cast<double>(vertices_.size());
}

std::vector<std::pair<int, int>> Polytope::edges() const {
  std::vector<std::pair<int, int>> out;
  const int nv = static_cast<int>(vertices_.size());
  for (int i = 0; i < nv; ++i) {
    for (int j = i + 1; j < nv; ++j) {
      std::vector<int> common;
      std::set_intersection(incidence_[static_cast<size_t>(i)].begin(), incidence_[static_cast<size_t>(i)].end(),
                            incidence_[static_cast<size_t>(j)].begin(), incidence_[static_cast<size_t>(j)].end(),
                            std::back_inserter(common));
      if (dim_ == 1) {
        out.emplace_back(i, j);
        continue;
      }
      if (static_cast<int>(common.size()) < dim_ - 1) continue;
      Mat nm(static_cast<Eigen::Index>(common.size()), dim_);
      for (size_t k = 0; k < common.size(); ++k) {
        nm.row(static_cast<Eigen::Index>(k)) = facets_[static_cast<size_t>(common[k])].a.transpose();
      }
      if (rank_of(nm, 1e-9) == dim_ - 1) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<int> Polytope::face(const Vec& u) const {
  require_dim(u, dim_, "direction");
  const double h = support(u);
  const double slack = 10 * eps_ * std::max(1.0, u.norm());
  std::vector<int> out;
  for (size_t v = 0; v < vertices_.size(); ++v) {
    if (u.dot(vertices_[v]) >= h - slack) out.push_back(static_cast<int>(v));
  }
  return out;
}

bool Polytope::is_origin_symmetric() const {
  for (const auto& v : vertices_) {
    bool found = false;
    for (const auto& w : vertices_) {
      if ((v + w).cwiseAbs().maxCoeff() <= 100 * eps_) { found = true; break; }
    }
    if (!found) return false;
  }
  return true;
}

Polytope Polytope::translated(const Vec& t) const {
  require_dim(t, dim_, "translation");
  auto f = facets_;
  for (auto& h : f) h.b += h.a.dot(t);
  auto v = vertices_;
  for (auto& x : v) x += t;
  return Polytope(dim_, std::move(f), std::move(v), tol_);
}

Polytope Polytope::scaled(double s) const {
  if (!(s > 0.0)) throw InputError("scale factor must be positive");
  auto f = facets_;
  for (auto& h : f) h.b *= s;
  auto v = vertices_;
  for (auto& x : v) x *= s;
  return Polytope(dim_, std::move(f), std::move(v), tol_);
}

Polytope Polytope::affine_image(const Mat& A, const Vec& b) const {
  if (A.rows() != dim_ || A.cols() != dim_) throw InputError("affine map: dimension mismatch");
  require_dim(b, dim_, "affine offset");
  Eigen::FullPivLU<Mat> lu(A);
  if (!lu.isInvertible()) throw InputError("affine map must be invertible");
  const Mat inv_t = lu.inverse().transpose();
  std::vector<Halfspace> f;
  for (const auto& h : facets_) {
    Vec a = inv_t * h.a;
    double off = h.b + a.dot(b);
    const double n = a.norm();
    f.push_back({a / n, off / n});
  }
  std::vector<Vec> v;
  for (const auto& x : vertices_) v.push_back(A * x + b);
  return Polytope(dim_, std::move(f), std::move(v), tol_);
}

std::string Polytope::invariant_violation() const {
  if (static_cast<int>(vertices_.size()) < dim_ + 1) return "too few vertices";
  for (size_t f = 0; f < facets_.size(); ++f) {
    if (std::abs(facets_[f].a.norm() - 1.0) > 1e-12) return "facet " + std::to_string(f) + " normal not unit";
    int tight = 0;
    for (const auto& v : vertices_) {
      const double s = facets_[f].a.dot(v) - facets_[f].b;
      if (s > 10 * eps_) return "vertex violates facet " + std::to_string(f);
      if (std::abs(s) <= 10 * eps_) ++tight;
    }
    if (tight < dim_) return "facet " + std::to_string(f) + " tight at fewer than d vertices";
  }
  try {
    check_region(facets_, dim_, tol_);
  } catch (const ComputeError& e) {
    return e.what();
  }
  return {};
}

double support(const Polytope& p, const Vec& u) {
  require_dim(u, p.dim(), "support direction");
  if (u.norm() == 0.0) throw InputError("support direction must be nonzero");
  return p.support(u);
}

Polytope vertices_from_facets(std::vector<Halfspace> facets, const Tolerance& tol) {
  return Polytope::from_facets(std::move(facets), tol);
}

Polytope facets_from_vertices(std::vector<Vec> vertices, const Tolerance& tol) {
  return Polytope::from_vertices(std::move(vertices), tol);
}

TranslateContainment contains_translate(const Polytope& outer, const Polytope& inner) {
  if (outer.dim() != inner.dim()) throw InputError("contains_translate: dimension mismatch");
  const int d = outer.dim();
  // maximize s  s.t.  <a_i, t> + s <= b_i - h_inner(a_i),  s <= 1
  LinearProgram lp(d + 1);
  for (const auto& h : outer.facets()) {
    Vec row(d + 1);
    row.head(d) = h.a;
    row(d) = 1.0;
    lp.add_constraint(row, Relation::le, h.b - inner.support(h.a));
  }
  Vec cap = Vec::Zero(d + 1);
  cap(d) = 1.0;
  lp.add_constraint(cap, Relation::le, 1.0);
  lp.set_objective(cap);
  const auto r = solve_lp(lp, outer.tol());
  if (r.status != LpStatus::optimal) throw ComputeError("contains_translate: LP failed");
  TranslateContainment out;
  out.margin = r.x(d);
  const double eps = std::max(outer.eps(), inner.eps()) * 10;
  out.contained = out.margin >= -eps;
  if (out.contained) out.translation = Vec(r.x.head(d));
  return out;
}

Polytope polar(const Polytope& p) {
  for (const auto& h : p.facets()) {
    if (h.b <= p.eps()) throw ComputeError("origin not interior");
  }
  std::vector<Vec> verts;
  for (const auto& h : p.facets()) verts.push_back(h.a / h.b);
  std::vector<Halfspace> facets;
  for (const auto& v : p.vertices()) {
    const double n = v.norm();
    facets.push_back({v / n, 1.0 / n});
  }
  sort_points(verts);
  return Polytope(p.dim(), std::move(facets), std::move(verts), p.tol());
}

bool is_generic(const Polytope& p) {
  const int d = p.dim();
  const int m = static_cast<int>(p.facets().size());
  if (m < d) return true;
  std::vector<int> idx(static_cast<size_t>(d));
  std::iota(idx.begin(), idx.end(), 0);
  Mat A(d, d);
  do {
    for (int r = 0; r < d; ++r) A.row(r) = p.facets()[static_cast<size_t>(idx[static_cast<size_t>(r)])].a.transpose();
    if (std::abs(A.determinant()) <= p.tol().geom) return false;
  } while (next_combination(idx, m));
  return true;
}

GenericizeResult genericize(const Polytope& p, double eps, std::uint64_t seed) {
  if (!(eps > 0.0 && eps < 0.1)) throw InputError("genericize: eps must lie in (0, 0.1)");
  for (const auto& h : p.facets()) {
    if (h.b <= p.eps()) throw ComputeError("origin not interior");
  }
  const int d = p.dim();
  double scale = 0.0;
  for (const auto& h : p.facets()) scale = std::max(scale, h.b);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  for (int attempt = 1; attempt <= 1000; ++attempt) {
    std::vector<Halfspace> f;
    double max_angle = 0.0;
    for (const auto& h : p.facets()) {
      Vec w(d);
      for (int j = 0; j < d; ++j) w(j) = gauss(rng);
      w -= w.dot(h.a) * h.a;
      const double theta = eps * unif(rng);
      Vec a = h.a;
      if (w.norm() > 1e-12) {
        w.normalize();
        a = std::cos(theta) * h.a + std::sin(theta) * w;
        max_angle = std::max(max_angle, std::acos(std::clamp(a.dot(h.a), -1.0, 1.0)));
      }
      f.push_back({a, p.support(a) + eps * scale});
    }
    try {
      auto q = Polytope::from_facets(f, p.tol());
      if (q.facets().size() != p.facets().size() || !is_generic(q)) continue;
      double lam = 0.0;
      for (const auto& v : q.vertices()) {
        for (const auto& h : p.facets()) lam = std::max(lam, h.a.dot(v) / h.b);
      }
      return {std::move(q), max_angle, (lam - 1.0) / eps, attempt};
    } catch (const ComputeError&) {
      continue;
    }
  }
  throw ComputeError("genericization failed");
}

std::vector<Polytope> circumscribed_simplices(const Polytope& p) {
  if (!is_generic(p)) throw ComputeError("circumscribed_simplices requires a generic polytope");
  const int d = p.dim();
  const int m = static_cast<int>(p.facets().size());
  std::vector<Polytope> out;
  if (m < d + 1) return out;
  std::vector<int> idx(static_cast<size_t>(d + 1));
  std::iota(idx.begin(), idx.end(), 0);
  do {
    // The chosen halfspaces bound a simplex iff the origin is interior to the
    // convex hull of their normals: maximize the smallest barycentric weight.
    LinearProgram lp(d + 2);
    for (int k = 0; k <= d; ++k) {
      Vec row = Vec::Zero(d + 2);
      row(k) = 1.0;
      row(d + 1) = -1.0;
      lp.add_constraint(row, Relation::ge, 0.0);
    }
    for (int j = 0; j < d; ++j) {
      Vec row = Vec::Zero(d + 2);
      for (int k = 0; k <= d; ++k) row(k) = p.facets()[static_cast<size_t>(idx[static_cast<size_t>(k)])].a(j);
      lp.add_constraint(row, Relation::eq, 0.0);
    }
    Vec sum = Vec::Zero(d + 2);
    sum.head(d + 1).setOnes();
    lp.add_constraint(sum, Relation::eq, 1.0);
    Vec obj = Vec::Zero(d + 2);
    obj(d + 1) = 1.0;
    lp.set_objective(obj);
    const auto r = solve_lp(lp, p.tol());
    if (r.status != LpStatus::optimal || r.value <= p.tol().geom) continue;
    std::vector<Halfspace> f;
    for (int k : idx) f.push_back(p.facets()[static_cast<size_t>(k)]);
    out.push_back(Polytope::from_facets(std::move(f), p.tol()));
  } while (next_combination(idx, m));
  return out;
}

std::vector<Vec> ccw_vertices(const Polytope& p) {
  if (p.dim() != 2) throw InputError("ccw_vertices needs a planar polytope");
  const Vec c = p.vertex_centroid();
  auto v = p.vertices();
  std::sort(v.begin(), v.end(), [&](const Vec& x, const Vec& y) {
    return std::atan2(x(1) - c(1), x(0) - c(0)) < std::atan2(y(1) - c(1), y(0) - c(0));
  });
  return v;
}

namespace {

double polygon_area(const std::vector<Vec>& ccw) {
  double s = 0.0;
  for (size_t i = 0; i < ccw.size(); ++i) {
    const Vec& a = ccw[i];
    const Vec& b = ccw[(i + 1) % ccw.size()];
    s += a(0) * b(1) - a(1) * b(0);
  }
  return 0.5 * std::abs(s);
}

// Area of a planar convex polygon embedded in R^3 with unit normal n.
double facet_area_3d(std::vector<Vec> pts, const Vec& n) {
  Vec c = Vec::Zero(3);
  for (const auto& p : pts) c += p;
  c /= static_cast<double>(pts.size());
  Eigen::Vector3d nn(n(0), n(1), n(2));
  Eigen::Vector3d e1 = nn.unitOrthogonal();
  Eigen::Vector3d e2 = nn.cross(e1);
  std::vector<Vec> flat;
  for (const auto& p : pts) {
    Eigen::Vector3d q(p(0) - c(0), p(1) - c(1), p(2) - c(2));
    Vec f(2);
    f << q.dot(e1), q.dot(e2);
    flat.push_back(f);
  }
  std::sort(flat.begin(), flat.end(),
            [](const Vec& x, const Vec& y) { return std::atan2(x(1), x(0)) < std::atan2(y(1), y(0)); });
  return polygon_area(flat);
}

}  // namespace

double measure(const Polytope& p, Measure kind) {
  const int d = p.dim();
  switch (kind) {
    case Measure::volume:
      if (d == 1) return p.support(Vec::Ones(1)) + p.support(-Vec::Ones(1));
      if (d == 2) return polygon_area(ccw_vertices(p));
      if (d == 3) {
        const Vec c = p.vertex_centroid();
        double vol = 0.0;
        for (size_t f = 0; f < p.facets().size(); ++f) {
          std::vector<Vec> pts;
          for (size_t v = 0; v < p.vertices().size(); ++v) {
            const auto& inc = p.vertex_facets(static_cast<int>(v));
            if (std::find(inc.begin(), inc.end(), static_cast<int>(f)) != inc.end()) pts.push_back(p.vertices()[v]);
          }
          const auto& h = p.facets()[f];
          vol += (h.b - h.a.dot(c)) * facet_area_3d(pts, h.a) / 3.0;
        }
        return vol;
      }
      throw InputError("volume is supported for d <= 3");
    case Measure::area:
      if (d != 2) throw InputError("area is supported for d = 2");
      return polygon_area(ccw_vertices(p));
    case Measure::perimeter: {
      if (d != 2) throw InputError("perimeter is supported for d = 2");
      const auto v = ccw_vertices(p);
      double s = 0.0;
      for (size_t i = 0; i < v.size(); ++i) s += (v[(i + 1) % v.size()] - v[i]).norm();
      return s;
    }
  }
  throw InputError("unknown measure");
}

}  // namespace nonsep
