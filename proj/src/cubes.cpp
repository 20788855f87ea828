#include "nonsep/cubes.hpp"

#include "nonsep/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <set>
#include <string>

namespace nonsep {
namespace {

using P2 = std::array<std::int64_t, 2>;

std::int64_t cross(const P2& o, const P2& a, const P2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain; collinear points dropped, counter-clockwise.
std::vector<P2> planar_hull(std::vector<P2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<P2> h(2 * pts.size());
  size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

HullMetrics metrics_of(const std::vector<P2>& h) {
  HullMetrics m;
  for (size_t i = 0; i < h.size(); ++i) {
    const auto& a = h[i];
    const auto& b = h[(i + 1) % h.size()];
    m.doubled_area += a[0] * b[1] - a[1] * b[0];
    const double dx = static_cast<double>(b[0] - a[0]);
    const double dy = static_cast<double>(b[1] - a[1]);
    m.perimeter += std::sqrt(dx * dx + dy * dy);
  }
  m.area = static_cast<double>(m.doubled_area) / 2.0;
  return m;
}

void require_planar_objective(Measure objective) {
  if (objective != Measure::area && objective != Measure::perimeter) {
    throw InputError("objective must be area or perimeter");
  }
}

// ---- exhaustive search over cell subsets of a g x g grid ----

struct Candidate {
  bool valid = false;
  std::vector<int> cells;
  std::int64_t doubled_area = 0;
  double value = 0.0;
};

bool better(const Candidate& a, const Candidate& b, Measure objective) {
  if (!b.valid) return a.valid;
  if (!a.valid) return false;
  if (objective == Measure::area) {
    if (a.doubled_area != b.doubled_area) return a.doubled_area > b.doubled_area;
  } else {
    const double tie = 1e-12 * std::max(1.0, std::abs(b.value));
    if (std::abs(a.value - b.value) > tie) return a.value > b.value;
  }
  return a.cells < b.cells;
}

bool contiguous(std::uint32_t mask) {
  mask >>= std::countr_zero(mask);
  return (mask & (mask + 1)) == 0;
}

class GridSearch {
 public:
  GridSearch(int n, int g, Measure objective) : n_(n), g_(g), objective_(objective) {}

  // Scores `idx` when it is a WNS placement and the smallest image of its
  // dihedral orbit.
  bool consider(const std::vector<int>& idx, Candidate& best, std::vector<int>& scratch,
                std::vector<P2>& pts) const {
    std::uint32_t xs = 0, ys = 0;
    for (int c : idx) {
      xs |= 1u << (c / g_);
      ys |= 1u << (c % g_);
    }
    if (!contiguous(xs) || !contiguous(ys)) return false;
    const int m = g_ - 1;
    for (int s = 1; s < 8; ++s) {
      scratch.clear();
      for (int c : idx) {
        int x = c / g_, y = c % g_;
        if (s & 1) x = m - x;
        if (s & 2) y = m - y;
        if (s & 4) std::swap(x, y);
        scratch.push_back(x * g_ + y);
      }
      std::sort(scratch.begin(), scratch.end());
      if (scratch < idx) return false;
    }
    pts.clear();
    for (int c : idx) {
      const std::int64_t x = c / g_, y = c % g_;
      pts.push_back({x, y});
      pts.push_back({x + 1, y});
      pts.push_back({x, y + 1});
      pts.push_back({x + 1, y + 1});
    }
    const auto hm = metrics_of(planar_hull(pts));
    Candidate cand;
    cand.valid = true;
    cand.doubled_area = hm.doubled_area;
    cand.value = objective_ == Measure::area ? hm.area : hm.perimeter;
    if (better(cand, best, objective_)) {
      cand.cells = idx;
      best = std::move(cand);
    }
    return true;
  }

  CubeSearchResult finish(const Candidate& best, std::uint64_t subsets, std::uint64_t evaluated) const {
    if (!best.valid) throw ComputeError("no WNS placement found");
    CubeSearchResult r;
    r.best.d = 2;
    for (int c : best.cells) r.best.offsets.push_back({c / g_, c % g_});
    r.value = best.value;
    r.doubled_area = best.doubled_area;
    r.subsets = subsets;
    r.evaluated = evaluated;
    return r;
  }

  int n() const { return n_; }
  int cells() const { return g_ * g_; }

 private:
  int n_;
  int g_;
  Measure objective_;
};

GridSearch make_search(int n, Measure objective, int grid) {
  if (n < 4 || n > 6) throw InputError("exhaustive search needs 4 <= n <= 6");
  require_planar_objective(objective);
  const int g = grid == 0 ? n : grid;
  if (g < n || g > 8) throw InputError("grid must satisfy n <= grid <= 8");
  if (binomial(g * g, n) > 50'000'000ULL) throw InputError("search space too large");
  return GridSearch(n, g, objective);
}

constexpr std::uint64_t kChunk = 1 << 14;

}  // namespace

void IntegerCubeFamily::validate() const {
  if (d < 1) throw InputError("cube family dimension must be positive");
  if (offsets.empty()) throw InputError("cube family must be non-empty");
  for (const auto& o : offsets) {
    if (static_cast<int>(o.size()) != d) throw InputError("cube offset has wrong dimension");
  }
  std::set<Cell> seen(offsets.begin(), offsets.end());
  if (seen.size() != offsets.size()) throw InputError("cube offsets must be distinct");
}

bool cube_is_wns(const IntegerCubeFamily& f) {
  f.validate();
  for (int j = 0; j < f.d; ++j) {
    std::vector<std::int64_t> s;
    for (const auto& o : f.offsets) s.push_back(o[static_cast<size_t>(j)]);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.back() - s.front() + 1 != static_cast<std::int64_t>(s.size())) return false;
  }
  return true;
}

IntBox bounding_box(const IntegerCubeFamily& f) {
  f.validate();
  IntBox b{f.offsets[0], f.offsets[0]};
  for (const auto& o : f.offsets) {
    for (int j = 0; j < f.d; ++j) {
      const auto k = static_cast<size_t>(j);
      b.lo[k] = std::min(b.lo[k], o[k]);
      b.hi[k] = std::max(b.hi[k], o[k]);
    }
  }
  for (auto& h : b.hi) ++h;
  return b;
}

std::vector<Vec> cube_corners(const IntegerCubeFamily& f) {
  f.validate();
  std::vector<Vec> out;
  for (const auto& o : f.offsets) {
    for (int mask = 0; mask < (1 << f.d); ++mask) {
      Vec v(f.d);
      for (int j = 0; j < f.d; ++j) v(j) = static_cast<double>(o[static_cast<size_t>(j)] + ((mask >> j) & 1));
      out.push_back(v);
    }
  }
  return out;
}

HullMetrics hull_metrics(const IntegerCubeFamily& f) {
  f.validate();
  if (f.d != 2) throw InputError("hull metrics need d = 2");
  std::vector<P2> pts;
  for (const auto& o : f.offsets) {
    for (int dx = 0; dx < 2; ++dx) {
      for (int dy = 0; dy < 2; ++dy) pts.push_back({o[0] + dx, o[1] + dy});
    }
  }
  return metrics_of(planar_hull(std::move(pts)));
}

double hull_objective(const IntegerCubeFamily& f, Measure objective) {
  switch (objective) {
    case Measure::area:
      return hull_metrics(f).area;
    case Measure::perimeter:
      return hull_metrics(f).perimeter;
    case Measure::volume:
      if (f.d == 2) return hull_metrics(f).area;
      if (f.d == 1 || f.d == 3) return measure(Polytope::from_vertices(cube_corners(f)), Measure::volume);
      throw InputError("volume objective needs d <= 3");
  }
  throw InputError("unknown objective");
}

IntegerCubeFamily construct_extremal(int n) {
  if (n < 4) throw InputError("extremal construction needs n >= 4");
  IntegerCubeFamily f;
  f.d = 2;
  f.offsets = {{1, 0}, {n - 1, 1}, {n - 2, n - 1}, {0, n - 2}};
  for (int k = 2; k <= n - 3; ++k) f.offsets.push_back({k, k});
  return f;
}

double extremal_perimeter(int n) { return 4.0 + 4.0 * std::sqrt(static_cast<double>(n * n - 4 * n + 5)); }

ShadowResult shadow_normalize(const IntegerCubeFamily& f, Measure objective) {
  if (!cube_is_wns(f)) throw InputError("shadow normalization needs a WNS family");
  if (objective != Measure::volume) {
    require_planar_objective(objective);
    if (f.d != 2) throw InputError("area and perimeter objectives need d = 2");
  } else if (f.d > 3) {
    throw InputError("volume objective needs d <= 3");
  }
  const int n = f.size();
  ShadowResult res;
  res.family = f;
  auto& cur = res.family;
  double value = hull_objective(cur, objective);

  while (true) {
    const IntBox box = bounding_box(cur);
    bool found = false;
    ShadowStep best;
    for (int j = 0; j < f.d; ++j) {
      if (box.extent(j) >= n) continue;
      const auto k = static_cast<size_t>(j);
      for (int p = 0; p < n; ++p) {
        const auto slab = cur.offsets[static_cast<size_t>(p)][k];
        const auto shared = std::count_if(cur.offsets.begin(), cur.offsets.end(),
                                          [&](const Cell& o) { return o[k] == slab; });
        if (shared < 2) continue;
        for (const auto to : {box.lo[k] - 1, box.hi[k]}) {
          auto trial = cur;
          trial.offsets[static_cast<size_t>(p)][k] = to;
          const double v = hull_objective(trial, objective);
          if (!found || v > best.after + 1e-12 * std::max(1.0, std::abs(best.after))) {
            best = {j, p, slab, to, value, v};
            found = true;
          }
        }
      }
    }
    if (!found) break;
    cur.offsets[static_cast<size_t>(best.cube)][static_cast<size_t>(best.axis)] = best.to;
    if (!cube_is_wns(cur)) throw ComputeError("shadow step broke weak non-separability");
    if (best.after < value - 1e-9 * std::max(1.0, std::abs(value))) {
      throw ComputeError("shadow step decreased the objective");
    }
    value = best.after;
    res.steps.push_back(best);
  }

  const IntBox box = bounding_box(cur);
  for (auto& o : cur.offsets) {
    for (size_t k = 0; k < o.size(); ++k) o[k] -= box.lo[k];
  }
  res.full_box = true;
  for (int j = 0; j < f.d; ++j) res.full_box = res.full_box && box.extent(j) == n;
  return res;
}

CubeSearchResult exhaustive_max(int n, Measure objective, int grid) {
  const auto search = make_search(n, objective, grid);
  const std::uint64_t total = binomial(search.cells(), n);
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<Candidate> best(chunks);
  std::vector<std::uint64_t> evaluated(chunks, 0);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const auto cu = static_cast<std::uint64_t>(c);
    auto idx = unrank_combination(cu * kChunk, search.cells(), n);
    std::vector<int> scratch;
    std::vector<P2> pts;
    const std::uint64_t end = std::min(total, (cu + 1) * kChunk);
    for (std::uint64_t r = cu * kChunk; r < end; ++r) {
      if (search.consider(idx, best[cu], scratch, pts)) ++evaluated[cu];
      next_combination(idx, search.cells());
    }
  }
  Candidate overall;
  std::uint64_t count = 0;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    if (better(best[c], overall, objective)) overall = best[c];
    count += evaluated[c];
  }
  return search.finish(overall, total, count);
}

namespace serial {

CubeSearchResult exhaustive_max(int n, Measure objective, int grid) {
  const auto search = make_search(n, objective, grid);
  std::vector<int> idx(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
  Candidate best;
  std::vector<int> scratch;
  std::vector<P2> pts;
  std::uint64_t total = 0, evaluated = 0;
  do {
    ++total;
    if (search.consider(idx, best, scratch, pts)) ++evaluated;
  } while (next_combination(idx, search.cells()));
  return search.finish(best, total, evaluated);
}

}  // namespace serial
}  // namespace nonsep
