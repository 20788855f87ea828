#include "nonsep/stability.hpp"

#include "nonsep/combinatorics.hpp"
#include "nonsep/lp.hpp"
#include "nonsep/separability.hpp"
#include "nonsep/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

namespace nonsep {
namespace {

constexpr int kMaxBalls = 16;
// Feasibility slack for candidate balls, relative to the radius. Much tighter
// than the certification tolerance so a near-tangent support set cannot
// undercut the true optimum.
constexpr double kFeasible = 1e-12;
// Largest norm of a convex combination of active gradients accepted as zero.
constexpr double kStationary = 1e-6;

std::vector<double> real_roots(double a, double b, double c) {
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), 1e-300});
  if (std::abs(a) <= 1e-14 * scale) {
    if (std::abs(b) <= 1e-14 * scale) return {};
    return {-c / b};
  }
  double disc = b * b - 4 * a * c;
  if (disc < 0) {
    if (disc < -1e-12 * b * b) return {};
    disc = 0;
  }
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  std::vector<double> r{q / a};
  if (q != 0.0) r.push_back(c / q);
  return r;
}

double cover_excess(const BallFamily& f, const Vec& c, double r) {
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < f.size(); ++i) {
    const auto k = static_cast<size_t>(i);
    worst = std::max(worst, (c - f.centers[k]).norm() + f.radii[k] - r);
  }
  return worst;
}

// Balls in `s` internally tangent to a ball of radius R centred in their
// affine hull: the pairwise differences are linear in (c, R), the first
// tangency closes a quadratic in R.
void support_candidates(const BallFamily& f, const std::vector<int>& s, std::vector<Circumball>& out) {
  const auto& p1 = f.centers[static_cast<size_t>(s[0])];
  const double t1 = f.radii[static_cast<size_t>(s[0])];
  const int k = static_cast<int>(s.size());
  double tmax = 0.0;
  for (int i : s) tmax = std::max(tmax, f.radii[static_cast<size_t>(i)]);
  if (k == 1) {
    out.push_back({p1, t1, s});
    return;
  }
  Mat V(f.dim(), k - 1);
  Vec ra(k - 1), rb(k - 1);
  for (int j = 1; j < k; ++j) {
    const auto sj = static_cast<size_t>(s[static_cast<size_t>(j)]);
    V.col(j - 1) = f.centers[sj] - p1;
    ra(j - 1) = 0.5 * (V.col(j - 1).squaredNorm() - f.radii[sj] * f.radii[sj] + t1 * t1);
    rb(j - 1) = f.radii[sj] - t1;
  }
  const Mat G = V.transpose() * V;
  const Eigen::SelfAdjointEigenSolver<Mat> eig(G);
  if (eig.eigenvalues()(0) <= 1e-12 * std::max(1.0, eig.eigenvalues()(k - 2))) return;
  const Eigen::LDLT<Mat> ldlt(G);
  const Vec wa = V * ldlt.solve(ra);
  const Vec wb = V * ldlt.solve(rb);
  for (double r : real_roots(wb.squaredNorm() - 1.0, 2.0 * (wa.dot(wb) + t1), wa.squaredNorm() - t1 * t1)) {
    if (!(r >= tmax)) continue;
    out.push_back({p1 + wa + r * wb, r, s});
  }
}

}  // namespace

double BallFamily::total_radius() const { return std::accumulate(radii.begin(), radii.end(), 0.0); }

void BallFamily::validate() const {
  if (centers.empty()) throw InputError("ball family must be non-empty");
  if (centers.size() != radii.size()) throw InputError("ball family needs one radius per center");
  for (size_t i = 0; i < centers.size(); ++i) {
    require_dim(centers[i], centers[0].size(), "ball center");
    if (!centers[i].allFinite()) throw InputError("ball center must be finite");
    if (!(radii[i] > 0.0) || !std::isfinite(radii[i])) throw InputError("ball radius must be positive");
  }
}

Circumball ball_circumradius(const BallFamily& f, double tol) {
  f.validate();
  if (f.size() > kMaxBalls) throw InputError("circumradius solver handles at most 16 balls");
  const int n = f.size();
  const int kmax = std::min(n, f.dim() + 1);
  std::optional<Circumball> best;
  std::vector<Circumball> cands;
  for (int k = 1; k <= kmax; ++k) {
    std::vector<int> s(static_cast<size_t>(k));
    std::iota(s.begin(), s.end(), 0);
    do {
      cands.clear();
      support_candidates(f, s, cands);
      for (auto& c : cands) {
        if (best && c.radius >= best->radius) continue;
        if (cover_excess(f, c.center, c.radius) <= kFeasible * std::max(1.0, c.radius)) best = std::move(c);
      }
    } while (next_combination(s, n));
  }
  if (!best) throw ComputeError("circumradius: no enclosing support set found");

  // Certificate: zero lies in the hull of the active unit gradients.
  const double scale = tol * std::max(1.0, best->radius);
  std::vector<Vec> grads;
  best->support.clear();
  bool at_center = false;
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<size_t>(i);
    const Vec g = best->center - f.centers[k];
    if (best->radius - (g.norm() + f.radii[k]) > scale) continue;
    best->support.push_back(i);
    if (g.norm() <= scale) at_center = true;
    else grads.push_back(g.normalized());
  }
  if (!at_center) {
    const int m = static_cast<int>(grads.size());
    const int d = f.dim();
    LinearProgram lp(m + 1);  // weights, then the infinity-norm bound s
    Vec sum = Vec::Zero(m + 1);
    sum.head(m).setOnes();
    lp.add_constraint(sum, Relation::eq, 1.0);
    for (int j = 0; j < d; ++j) {
      Vec row = Vec::Zero(m + 1);
      for (int i = 0; i < m; ++i) row(i) = grads[static_cast<size_t>(i)](j);
      row(m) = -1.0;
      lp.add_constraint(row, Relation::le, 0.0);
      row.head(m) = -row.head(m);
      lp.add_constraint(row, Relation::le, 0.0);
    }
    lp.set_all_nonnegative();
    Vec obj = Vec::Zero(m + 1);
    obj(m) = 1.0;
    lp.set_objective(obj, Sense::minimize);
    const auto r = solve_lp(lp);
    if (r.status != LpStatus::optimal || r.value > kStationary) {
      throw ComputeError("circumradius: optimality certificate failed at radius " + std::to_string(best->radius));
    }
  }
  return *best;
}

BallFamily stability_construction(const std::vector<double>& taus, double delta) {
  const int n = static_cast<int>(taus.size());
  if (n < 3) throw InputError("bent chain needs at least 3 balls");
  for (double t : taus) {
    if (!(t > 0.0) || !std::isfinite(t)) throw InputError("radii must be positive");
  }
  if (!(delta >= 0.0) || !(delta < taus[1])) throw InputError("need 0 <= delta < tau_2");
  double a = 0.0;  // |p_n - p_2|
  for (int i = 1; i + 1 < n; ++i) a += taus[static_cast<size_t>(i)] + taus[static_cast<size_t>(i + 1)];
  const double b = taus[0] + taus[1];
  BallFamily f;
  f.radii = taus;
  f.centers.resize(static_cast<size_t>(n), Vec::Zero(2));
  f.centers[1] << 0.0, delta;
  f.centers.back() << std::sqrt(a * a - delta * delta), 0.0;
  f.centers[0] << -std::sqrt(b * b - delta * delta), 0.0;
  const Vec u = (f.centers.back() - f.centers[1]) / a;
  double s = 0.0;
  for (int i = 2; i + 1 < n; ++i) {
    s += taus[static_cast<size_t>(i - 1)] + taus[static_cast<size_t>(i)];
    f.centers[static_cast<size_t>(i)] = f.centers[1] + s * u;
  }
  return f;
}

double line_deviation(const std::vector<Vec>& pts) {
  if (pts.size() < 2) return 0.0;
  const auto d = pts[0].size();
  Vec mean = Vec::Zero(d);
  for (const auto& p : pts) mean += p;
  mean /= static_cast<double>(pts.size());
  Mat X(static_cast<Eigen::Index>(pts.size()), d);
  for (size_t i = 0; i < pts.size(); ++i) X.row(static_cast<Eigen::Index>(i)) = (pts[i] - mean).transpose();
  const Eigen::JacobiSVD<Mat> svd(X, Eigen::ComputeThinV);
  const Vec dir = svd.matrixV().col(0);
  double dev = 0.0;
  for (const auto& p : pts) {
    const Vec r = p - mean;
    dev = std::max(dev, (r - r.dot(dir) * dir).norm());
  }
  return dev;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw InputError("slope fit needs matching series of length >= 2");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0.0) throw InputError("slope fit needs distinct x values");
  return sxy / sxx;
}

StabilityFit stability_exponent(const std::vector<double>& taus, const std::vector<double>& deltas) {
  if (deltas.size() < 5) throw InputError("need at least 5 delta values");
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (double d : deltas) {
    if (d > 0.0) {
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  }
  if (!(hi >= 100.0 * lo)) throw InputError("deltas must span at least two decades");
  StabilityFit fit;
  std::vector<double> le, ld, ldel;
  for (double delta : deltas) {
    const auto f = stability_construction(taus, delta);
    StabilityRow row;
    row.delta = delta;
    row.eps = f.total_radius() - ball_circumradius(f).radius;
    row.deviation = line_deviation(f.centers);
    row.used = row.eps >= kEpsFloor && row.deviation > 0.0 && delta > 0.0;
    if (row.used) {
      le.push_back(std::log(row.eps));
      ld.push_back(std::log(row.deviation));
      ldel.push_back(std::log(delta));
    }
    fit.rows.push_back(row);
  }
  if (le.size() < 3) throw ComputeError("fewer than 3 rows with eps above the floor");
  fit.deviation_slope = fit_slope(le, ld);
  fit.eps_slope = fit_slope(ldel, le);
  return fit;
}

CubeChainReport cube_chain_counterexample(int n) {
  if (n < 3 || n > kMaxNsMembers) throw InputError("cube chain needs 3 <= n <= 20");
  CubeChainReport r;
  std::vector<Member> ms;
  Vec lo = Vec::Constant(2, std::numeric_limits<double>::infinity());
  Vec hi = -lo;
  for (int k = 0; k < n; ++k) {
    Vec x(2);
    x << k, k % 2;
    ms.push_back({x, 1.0});
    r.centers.push_back(Vec(x.array() + 0.5));
    lo = lo.cwiseMin(x);
    hi = hi.cwiseMax(Vec(x.array() + 1.0));
  }
  r.circumradius = (hi - lo).maxCoeff();
  r.eps = static_cast<double>(n) - r.circumradius;
  r.deviation = line_deviation(r.centers);
  const HomotheticFamily f(shapes::box(Vec::Zero(2), Vec::Ones(2)), ms);
  r.ns = is_ns(f).ns;
  return r;
}

}  // namespace nonsep
