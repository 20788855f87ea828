#include "nonsep/lattice.hpp"

#include "nonsep/combinatorics.hpp"
#include "nonsep/separability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace nonsep {
namespace {

void require_interior_origin(const Polytope& k) {
  for (const auto& h : k.facets()) {
    if (h.b <= k.eps()) throw ComputeError("origin not interior");
  }
}

// Calls fn(s) for every integer vector s with lo <= s <= hi.
template <class Fn>
void for_each_box_point(const std::vector<long>& lo, const std::vector<long>& hi, Fn&& fn) {
  const size_t d = lo.size();
  std::vector<long> s(lo);
  Vec v(static_cast<Eigen::Index>(d));
  while (true) {
    for (size_t j = 0; j < d; ++j) v(static_cast<Eigen::Index>(j)) = static_cast<double>(s[j]);
    fn(v);
    size_t j = 0;
    while (j < d && s[j] == hi[j]) {
      s[j] = lo[j];
      ++j;
    }
    if (j == d) return;
    ++s[j];
  }
}

// Evaluator of x -> min_z ||x - z||_K for x in the fundamental cell.
class CellDistance {
 public:
  explicit CellDistance(const LatticeArrangement& a) : k_(a.body) {
    require_interior_origin(k_);
    const int d = a.lattice.dim();
    double corner_norm = 0.0, corner_gauge = 0.0;
    for (int mask = 0; mask < (1 << d); ++mask) {
      Vec c(d);
      for (int j = 0; j < d; ++j) c(j) = (mask >> j) & 1;
      const Vec x = a.lattice.point(c);
      corner_norm = std::max(corner_norm, x.norm());
      corner_gauge = std::max(corner_gauge, knorm(k_, x));
    }
    double body_radius = 0.0;
    for (const auto& v : k_.vertices()) body_radius = std::max(body_radius, v.norm());
    // a minimiser z has ||x - z||_K <= ||x||_K <= corner_gauge
    const auto zs = a.lattice.points_in_ball(Vec::Zero(d), corner_norm + corner_gauge * body_radius);
    rows_.resize(static_cast<Eigen::Index>(k_.facets().size()), d);
    for (size_t i = 0; i < k_.facets().size(); ++i) {
      const auto& h = k_.facets()[i];
      rows_.row(static_cast<Eigen::Index>(i)) = (h.a / h.b).transpose();
    }
    // column j holds <a_i, z_j> / b_i
    rz_.resize(rows_.rows(), static_cast<Eigen::Index>(zs.size()));
    for (size_t j = 0; j < zs.size(); ++j) rz_.col(static_cast<Eigen::Index>(j)) = rows_ * zs[j];
  }

  double operator()(const Vec& x) const {
    const Eigen::VectorXd rx = rows_ * x;
    const auto nf = rows_.rows();
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < rz_.cols(); ++j) {
      const double* col = rz_.col(j).data();
      double g = 0.0;
      for (Eigen::Index i = 0; i < nf && g < best; ++i) g = std::max(g, rx(i) - col[i]);
      best = std::min(best, g);
    }
    return best;
  }

 private:
  const Polytope& k_;
  Mat rows_;
  Mat rz_;
};

// Euclidean radius of a lattice-coordinate cube of side h, from its centre.
double cell_radius(const Lattice& l, double h) {
  const int d = l.dim();
  double r = 0.0;
  for (int mask = 0; mask < (1 << d); ++mask) {
    Vec c(d);
    for (int j = 0; j < d; ++j) c(j) = ((mask >> j) & 1) ? 0.5 * h : -0.5 * h;
    r = std::max(r, l.point(c).norm());
  }
  return r;
}

std::vector<Vec> grid_centres(int d, int n) {
  std::vector<Vec> out;
  std::vector<long> lo(static_cast<size_t>(d), 0), hi(static_cast<size_t>(d), n - 1);
  for_each_box_point(lo, hi, [&](const Vec& s) { out.push_back((s.array() + 0.5).matrix() / n); });
  return out;
}

Bracket grid_bracket(const LatticeArrangement& a, int grid, bool parallel) {
  if (grid < 1) throw InputError("grid must be positive");
  const CellDistance dist(a);
  const auto centres = grid_centres(a.lattice.dim(), grid);
  std::vector<double> vals(centres.size());
  const auto n = static_cast<std::int64_t>(centres.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    vals[static_cast<size_t>(i)] = dist(a.lattice.point(centres[static_cast<size_t>(i)]));
  }
  const auto it = std::max_element(vals.begin(), vals.end());
  Bracket b;
  b.lower = *it;
  b.upper = b.lower + gauge_lipschitz(a.body) * cell_radius(a.lattice, 1.0 / grid);
  b.witness = a.lattice.point(centres[static_cast<size_t>(it - vals.begin())]);
  return b;
}

}  // namespace

Lattice::Lattice(Mat basis, const Tolerance& tol) : basis_(std::move(basis)) {
  if (basis_.rows() != basis_.cols() || basis_.rows() < 1) throw InputError("lattice basis must be square");
  if (!basis_.allFinite()) throw InputError("lattice basis must be finite");
  det_ = std::abs(basis_.determinant());
  if (det_ <= tol.geom) throw InputError("singular lattice basis");
  inverse_ = basis_.inverse();
}

Lattice Lattice::integer(int d) { return Lattice(Mat::Identity(d, d)); }

std::vector<Vec> Lattice::points_in_ball(const Vec& centre, double radius, std::int64_t limit) const {
  require_dim(centre, dim(), "ball centre");
  const int d = dim();
  const Vec sc = inverse_ * centre;
  std::vector<long> lo(static_cast<size_t>(d)), hi(static_cast<size_t>(d));
  double count = 1.0;
  for (int j = 0; j < d; ++j) {
    const double half = radius * inverse_.row(j).norm();
    lo[static_cast<size_t>(j)] = static_cast<long>(std::floor(sc(j) - half));
    hi[static_cast<size_t>(j)] = static_cast<long>(std::ceil(sc(j) + half));
    count *= static_cast<double>(hi[static_cast<size_t>(j)] - lo[static_cast<size_t>(j)] + 1);
  }
  if (count > static_cast<double>(limit)) throw ComputeError("enumeration bound overflow");
  std::vector<Vec> out;
  const double r2 = radius * radius * (1 + 1e-12) + 1e-18;
  for_each_box_point(lo, hi, [&](const Vec& s) {
    Vec z = basis_ * s;
    if ((z - centre).squaredNorm() <= r2) out.push_back(std::move(z));
  });
  return out;
}

Lattice dual_lattice(const Lattice& l) { return Lattice(l.inverse().transpose()); }

double density(const LatticeArrangement& a) {
  if (a.body.dim() != a.lattice.dim()) throw InputError("density: dimension mismatch");
  if (a.body.dim() > 3) throw InputError("density: unsupported dimension");
  return measure(a.body, Measure::volume) / a.lattice.det();
}

double knorm(const Polytope& k, const Vec& x) {
  require_interior_origin(k);
  require_dim(x, k.dim(), "point");
  double g = 0.0;
  for (const auto& h : k.facets()) g = std::max(g, h.a.dot(x) / h.b);
  return g;
}

double gauge_lipschitz(const Polytope& k) {
  require_interior_origin(k);
  double l = 0.0;
  for (const auto& h : k.facets()) l = std::max(l, 1.0 / h.b);
  return l;
}

Bracket covering_radius(const LatticeArrangement& a, const CoveringOptions& opt) {
  const int d = a.lattice.dim();
  if (a.body.dim() != d) throw InputError("covering_radius: dimension mismatch");
  if (d > 3) throw InputError("covering_radius: d <= 3 only");
  if (opt.grid < 1 || !(opt.width > 0)) throw InputError("covering_radius: bad options");
  const CellDistance dist(a);
  const double lip = gauge_lipschitz(a.body);

  auto cells = grid_centres(d, opt.grid);
  double h = 1.0 / opt.grid;
  Bracket b;
  b.lower = -1.0;
  double pruned_upper = 0.0;
  std::int64_t used = 0;
  while (true) {
    const auto n = static_cast<std::int64_t>(cells.size());
    used += n;
    std::vector<double> vals(cells.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) vals[static_cast<size_t>(i)] = dist(a.lattice.point(cells[static_cast<size_t>(i)]));
    for (size_t i = 0; i < cells.size(); ++i) {
      if (vals[i] > b.lower) {
        b.lower = vals[i];
        b.witness = a.lattice.point(cells[i]);
      }
    }
    const double slack = lip * cell_radius(a.lattice, h);
    double active_upper = 0.0;
    std::vector<Vec> next;
    for (size_t i = 0; i < cells.size(); ++i) {
      const double up = vals[i] + slack;
      if (up <= b.lower + 0.5 * opt.width) {
        pruned_upper = std::max(pruned_upper, up);
        continue;
      }
      active_upper = std::max(active_upper, up);
      next.push_back(cells[i]);
    }
    b.upper = std::max({b.lower, pruned_upper, active_upper});
    if (b.upper - b.lower <= opt.width) return b;
    if (used + static_cast<std::int64_t>(next.size()) * (1 << d) > opt.max_cells) {
      std::ostringstream msg;
      msg << "covering_radius: resolution too coarse, achieved bracket [" << b.lower << ", " << b.upper << "]";
      throw ComputeError(msg.str());
    }
    cells.clear();
    h *= 0.5;
    for (const auto& c : next) {
      for (int mask = 0; mask < (1 << d); ++mask) {
        Vec child = c;
        for (int j = 0; j < d; ++j) child(j) += ((mask >> j) & 1) ? 0.5 * h : -0.5 * h;
        cells.push_back(child);
      }
    }
  }
}

Bracket tightness(const LatticeArrangement& a, const CoveringOptions& opt) {
  if (!a.body.is_origin_symmetric()) throw InputError("tightness requires an origin-symmetric body");
  // an overlapping arrangement leaves no room at all
  auto b = covering_radius(a, opt);
  b.lower = std::max(0.0, b.lower - 1.0);
  b.upper = std::max(0.0, b.upper - 1.0);
  return b;
}

LatticeNsResult is_ns_lattice(const LatticeArrangement& a) {
  const auto& k = a.body;
  require_interior_origin(k);
  const auto dual = dual_lattice(a.lattice);
  const auto kp = polar(k);
  const int d = k.dim();
  // any dual basis vector bounds lambda1; h_K(w) >= min_i b_i |w| bounds the search ball
  double bound = std::numeric_limits<double>::infinity();
  for (int j = 0; j < d; ++j) {
    const Vec w = dual.basis().col(j);
    bound = std::min({bound, knorm(kp, w), knorm(kp, Vec(-w))});
  }
  double inradius = std::numeric_limits<double>::infinity();
  for (const auto& h : k.facets()) inradius = std::min(inradius, h.b);
  const auto cand = dual.points_in_ball(Vec::Zero(d), bound / inradius * (1 + 1e-9), 10'000'000);
  LatticeNsResult r;
  r.lambda1 = std::numeric_limits<double>::infinity();
  for (const auto& w : cand) {
    if (w.norm() <= 1e-12) continue;
    const double g = knorm(kp, w);
    if (g < r.lambda1) {
      r.lambda1 = g;
      r.shortest = w;
    }
  }
  r.support_check = k.support(r.shortest);
  r.ns = r.lambda1 >= 0.5 - k.tol().geom;
  return r;
}

PatchProbe finite_patch_probe(const LatticeArrangement& a, int patch, int dual_range, int random_dirs,
                              std::uint64_t seed) {
  const int d = a.lattice.dim();
  const auto& k = a.body;
  std::vector<Vec> zs;
  std::vector<long> lo(static_cast<size_t>(d), -patch), hi(static_cast<size_t>(d), patch);
  for_each_box_point(lo, hi, [&](const Vec& s) { zs.push_back(a.lattice.point(s)); });

  std::vector<Vec> dirs;
  const auto dual = dual_lattice(a.lattice);
  std::vector<long> dlo(static_cast<size_t>(d), -dual_range), dhi(static_cast<size_t>(d), dual_range);
  for_each_box_point(dlo, dhi, [&](const Vec& s) {
    long g = 0;
    for (int j = 0; j < d; ++j) g = std::gcd(g, static_cast<long>(std::llround(s(j))));
    if (g != 1) return;
    for (int j = 0; j < d; ++j) {
      if (s(j) != 0) {
        if (s(j) > 0) dirs.push_back(dual.point(s).normalized());
        return;
      }
    }
  });
  auto rng = stream_rng(seed, 0);
  std::normal_distribution<double> gauss;
  for (int i = 0; i < random_dirs; ++i) {
    Vec u(d);
    for (int j = 0; j < d; ++j) u(j) = gauss(rng);
    dirs.push_back(u.normalized());
  }

  PatchProbe out;
  const double tol = k.tol().gap;
  for (const auto& u : dirs) {
    const double up = k.support(u), down = k.support(-u);
    std::vector<double> c;
    c.reserve(zs.size());
    for (const auto& z : zs) c.push_back(u.dot(z));
    std::sort(c.begin(), c.end());
    const double mid = 0.5 * (c.front() + c.back());
    const double quarter = 0.125 * (c.back() - c.front());
    for (size_t i = 0; i + 1 < c.size(); ++i) {
      const double gap = (c[i + 1] - down) - (c[i] + up);
      const double at = 0.5 * (c[i] + c[i + 1]);
      if (gap > tol && std::abs(at - mid) <= quarter && gap > out.gap) {
        out.separable = true;
        out.gap = gap;
        out.direction = u;
      }
    }
  }
  return out;
}

double kronecker_gap(const Vec& u, int box_radius) {
  if (std::abs(u.norm() - 1.0) > 1e-9) throw InputError("kronecker_gap: u must be a unit vector");
  if (box_radius < 0) throw InputError("kronecker_gap: negative radius");
  const int d = static_cast<int>(u.size());
  std::vector<double> vals;
  std::vector<long> lo(static_cast<size_t>(d), -box_radius), hi(static_cast<size_t>(d), box_radius);
  for_each_box_point(lo, hi, [&](const Vec& z) {
    const double x = u.dot(z);
    vals.push_back(x - std::floor(x));
  });
  std::sort(vals.begin(), vals.end());
  double gap = 1.0 - vals.back() + vals.front();
  for (size_t i = 0; i + 1 < vals.size(); ++i) gap = std::max(gap, vals[i + 1] - vals[i]);
  return gap;
}

std::vector<WeakMinimumRow> weak_covering_minimum_1(const Polytope& p, const Lattice& l,
                                                    const std::vector<double>& t_grid,
                                                    const WeakMinimumOptions& opt) {
  const int d = p.dim();
  if (l.dim() != d) throw InputError("weak_covering_minimum_1: dimension mismatch");
  if (opt.window < 1 || opt.samples < 1) throw InputError("weak_covering_minimum_1: bad options");
  struct Projection {
    std::vector<double> g;
    double lo, hi;  // central half of the projected range
    double up, down, gap;
  };
  std::vector<Projection> proj;
  std::vector<long> lo(static_cast<size_t>(d), -opt.window), hi(static_cast<size_t>(d), opt.window);
  for (const auto& a : canonical_normals(p)) {
    Projection pr;
    for_each_box_point(lo, hi, [&](const Vec& s) { pr.g.push_back(a.dot(l.point(s))); });
    std::sort(pr.g.begin(), pr.g.end());
    const double mid = 0.5 * (pr.g.front() + pr.g.back());
    const double quarter = 0.25 * (pr.g.back() - pr.g.front());
    pr.lo = mid - quarter;
    pr.hi = mid + quarter;
    pr.up = p.support(a);
    pr.down = p.support(-a);
    pr.gap = 0.0;
    for (size_t i = 0; i + 1 < pr.g.size(); ++i) {
      if (pr.g[i + 1] >= pr.lo && pr.g[i] <= pr.hi) pr.gap = std::max(pr.gap, pr.g[i + 1] - pr.g[i]);
    }
    proj.push_back(std::move(pr));
  }
  std::vector<WeakMinimumRow> rows;
  for (double t : t_grid) {
    if (!(t >= 0)) throw InputError("weak_covering_minimum_1: t must be nonnegative");
    WeakMinimumRow row{t, 0.0, 0.0};
    for (const auto& pr : proj) row.miss_margin = std::max(row.miss_margin, pr.gap - t * (pr.up + pr.down));
    std::int64_t hits = 0;
    for (int i = 0; i < opt.samples; ++i) {
      auto rng = stream_rng(opt.seed, static_cast<std::uint64_t>(i));
      const auto& pr = proj[std::uniform_int_distribution<size_t>(0, proj.size() - 1)(rng)];
      const double c = std::uniform_real_distribution<double>(pr.lo, pr.hi)(rng);
      // hit iff some projected point lies in [c - t*up, c + t*down]
      const auto it = std::lower_bound(pr.g.begin(), pr.g.end(), c - t * pr.up);
      if (it != pr.g.end() && *it <= c + t * pr.down) ++hits;
    }
    row.hit_fraction = static_cast<double>(hits) / opt.samples;
    rows.push_back(row);
  }
  return rows;
}

Bracket covering_radius_grid(const LatticeArrangement& a, int grid) { return grid_bracket(a, grid, true); }

namespace serial {
Bracket covering_radius_grid(const LatticeArrangement& a, int grid) { return grid_bracket(a, grid, false); }
}  // namespace serial

}  // namespace nonsep
