#include "nonsep/shapes.hpp"

#include <cmath>
#include <numbers>

namespace nonsep::shapes {

Polytope box(const Vec& lo, const Vec& hi, const Tolerance& tol) {
  if (lo.size() != hi.size()) throw InputError("box: dimension mismatch");
  const auto d = static_cast<int>(lo.size());
  std::vector<Halfspace> f;
  for (int j = 0; j < d; ++j) {
    if (!(hi(j) > lo(j))) throw InputError("box: empty side");
    Vec e = Vec::Zero(d);
    e(j) = 1.0;
    f.push_back({e, hi(j)});
    f.push_back({-e, -lo(j)});
  }
  return Polytope::from_facets(std::move(f), tol);
}

Polytope cube(int d, double half, const Tolerance& tol) {
  return box(Vec::Constant(d, -half), Vec::Constant(d, half), tol);
}

Polytope cross_polytope(int d, double r, const Tolerance& tol) {
  std::vector<Vec> v;
  for (int j = 0; j < d; ++j) {
    Vec e = Vec::Zero(d);
    e(j) = r;
    v.push_back(e);
    v.push_back(-e);
  }
  return Polytope::from_vertices(std::move(v), tol);
}

Polytope standard_simplex(int d, const Tolerance& tol) {
  std::vector<Vec> v{Vec::Zero(d)};
  for (int j = 0; j < d; ++j) {
    Vec e = Vec::Zero(d);
    e(j) = 1.0;
    v.push_back(e);
  }
  return Polytope::from_vertices(std::move(v), tol);
}

Polytope regular_polygon(int k, double circumradius, double phase, const Tolerance& tol) {
  if (k < 3) throw InputError("regular_polygon: need at least 3 vertices");
  std::vector<Vec> v;
  for (int i = 0; i < k; ++i) {
    const double t = phase + 2.0 * std::numbers::pi * i / k;
    Vec p(2);
    p << circumradius * std::cos(t), circumradius * std::sin(t);
    v.push_back(p);
  }
  return Polytope::from_vertices(std::move(v), tol);
}

}  // namespace nonsep::shapes
