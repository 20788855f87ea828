#include "doctest.h"

#include "nonsep/polytope.hpp"
#include "nonsep/shapes.hpp"
#include "support/random_shapes.hpp"

#include <cmath>
#include <numbers>

using namespace nonsep;
using nonsep::testing::random_polygon;
using nonsep::testing::random_polytope;

namespace {

Vec v2(double a, double b) { Vec v(2); v << a, b; return v; }

bool has_vertex(const Polytope& p, const Vec& x, double tol = 1e-9) {
  for (const auto& v : p.vertices()) {
    if ((v - x).norm() <= tol) return true;
  }
  return false;
}

bool same_vertex_set(const Polytope& p, const Polytope& q, double tol = 1e-8) {
  if (p.vertices().size() != q.vertices().size()) return false;
  for (const auto& v : p.vertices()) {
    if (!has_vertex(q, v, tol)) return false;
  }
  return true;
}

Polytope triangle() { return shapes::standard_simplex(2); }

// Translation grid search: does some grid translate of `inner` fit in `outer`?
bool grid_fits(const Polytope& outer, const Polytope& inner, double h) {
  for (double x = -3; x <= 3; x += h) {
    for (double y = -3; y <= 3; y += h) {
      const Vec t = v2(x, y);
      bool ok = true;
      for (const auto& v : inner.vertices()) {
        for (const auto& f : outer.facets()) {
          if (f.a.dot(v + t) > f.b + 1e-12) { ok = false; break; }
        }
        if (!ok) break;
      }
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("support on boxes and triangles") {
  const auto sq = shapes::cube(2, 0.5);
  CHECK(support(sq, v2(1, 0)) == doctest::Approx(0.5));
  CHECK(support(sq, v2(1, 1)) == doctest::Approx(1.0));
  CHECK(support(triangle(), v2(1, 0)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(support(sq, v2(0, 0)), InputError);
}

TEST_CASE("vertex and facet completion") {
  SUBCASE("unit square from facets") {
    const auto p = shapes::box(v2(0, 0), v2(1, 1));
    CHECK(p.vertices().size() == 4);
    for (const auto& v : {v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1)}) CHECK(has_vertex(p, v));
  }
  SUBCASE("3-simplex from vertices has 4 facets") {
    CHECK(shapes::standard_simplex(3).facets().size() == 4);
  }
  SUBCASE("half cross-polytope from facets") {
    std::vector<Halfspace> f;
    for (int mask = 0; mask < 8; ++mask) {
      Vec a(3);
      for (int j = 0; j < 3; ++j) a(j) = (mask >> j & 1) ? 1.0 : -1.0;
      f.push_back({a, 0.5});
    }
    const auto p = vertices_from_facets(f);
    CHECK(p.vertices().size() == 6);
    for (int j = 0; j < 3; ++j) {
      Vec e = Vec::Zero(3);
      e(j) = 0.5;
      CHECK(has_vertex(p, e));
      CHECK(has_vertex(p, -e));
    }
  }
  SUBCASE("redundant inequalities are dropped, normals are unit") {
    auto p = Polytope::from_facets({{v2(2, 0), 2}, {v2(-1, 0), 0}, {v2(0, 1), 1}, {v2(0, -1), 0}, {v2(1, 1), 5}});
    CHECK(p.facets().size() == 4);
    CHECK(p.invariant_violation().empty());
  }
  SUBCASE("interior points are discarded") {
    auto p = Polytope::from_vertices({v2(0, 0), v2(2, 0), v2(0, 2), v2(0.5, 0.5), v2(1, 1)});
    CHECK(p.vertices().size() == 3);
  }
  SUBCASE("errors") {
    CHECK_THROWS_WITH_AS(Polytope::from_facets({{v2(1, 0), 1}, {v2(-1, 0), 0}}), "unbounded", ComputeError);
    CHECK_THROWS_WITH_AS(Polytope::from_facets({{v2(1, 0), 0}, {v2(-1, 0), 0}, {v2(0, 1), 1}, {v2(0, -1), 0}}),
                         "not full-dimensional", ComputeError);
    CHECK_THROWS_WITH_AS(Polytope::from_vertices({v2(0, 0), v2(1, 1), v2(2, 2)}), "not full-dimensional",
                         ComputeError);
  }
}

TEST_CASE("translate containment") {
  const auto big = shapes::box(v2(0, 0), v2(2, 2));
  const auto small = shapes::box(v2(0, 0), v2(1, 1));
  const auto r = contains_translate(big, small);
  CHECK(r.contained);
  REQUIRE(r.translation);
  for (const auto& v : small.vertices()) CHECK(big.contains(v + *r.translation));
  CHECK_FALSE(contains_translate(small, big).contained);
  CHECK(contains_translate(triangle().scaled(2), triangle()).contained);
  CHECK_THROWS_AS(contains_translate(big, shapes::cube(3)), InputError);
}

TEST_CASE("polar duality") {
  const auto p = polar(shapes::cube(2, 1.0));
  CHECK(same_vertex_set(p, shapes::cross_polytope(2, 1.0)));
  CHECK(same_vertex_set(polar(shapes::cross_polytope(3, 1.0)), shapes::cube(3, 1.0)));
  CHECK(same_vertex_set(polar(shapes::cube(2, 0.5)), shapes::cross_polytope(2, 2.0)));
  CHECK_THROWS_WITH_AS(polar(shapes::box(v2(0, 0), v2(1, 1))), "origin not interior", ComputeError);
}

TEST_CASE("genericity") {
  CHECK_FALSE(is_generic(shapes::cube(2)));
  CHECK(is_generic(triangle()));
  CHECK_FALSE(is_generic(shapes::regular_polygon(6)));
}

TEST_CASE("genericize") {
  SUBCASE("square") {
    const auto sq = shapes::cube(2, 0.5);
    const auto g = genericize(sq, 0.01, 3);
    CHECK(is_generic(g.polytope));
    CHECK(g.polytope.facets().size() == 4);
    CHECK(g.max_angle <= 0.01 + 1e-12);
    // every new normal within eps of an original one
    for (const auto& h : g.polytope.facets()) {
      double best = 10;
      for (const auto& o : sq.facets()) best = std::min(best, std::acos(std::clamp(h.a.dot(o.a), -1.0, 1.0)));
      CHECK(best <= 0.01 + 1e-9);
    }
    CHECK(contains_translate(g.polytope, sq).contained);
    for (const auto& v : sq.vertices()) CHECK(g.polytope.contains(v));
    CHECK(g.c >= 0.0);
  }
  SUBCASE("triangle stays a generic triangle") {
    const auto t = triangle().translated(v2(-1.0 / 3, -1.0 / 3));
    const auto g = genericize(t, 0.01);
    CHECK(g.polytope.facets().size() == 3);
    CHECK(is_generic(g.polytope));
  }
  SUBCASE("cube in d=3") {
    const auto c = shapes::cube(3);
    const auto g = genericize(c, 0.02, 5);
    CHECK(g.polytope.facets().size() == 6);
    CHECK(is_generic(g.polytope));
    for (const auto& v : c.vertices()) CHECK(g.polytope.contains(v));
  }
  CHECK_THROWS_AS(genericize(triangle(), 0.5), InputError);
}

TEST_CASE("circumscribed simplices") {
  const auto t = triangle().translated(v2(-1.0 / 3, -1.0 / 3));
  const auto s = circumscribed_simplices(t);
  REQUIRE(s.size() == 1);
  CHECK(same_vertex_set(s[0], t));

  const auto g = genericize(shapes::cube(2, 0.5), 0.01, 11).polytope;
  const auto quads = circumscribed_simplices(g);
  // Independent count: a 3-subset of normals bounds a triangle iff the
  // origin is a strictly positive combination of them.
  int expected = 0;
  const auto& f = g.facets();
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      for (int k = j + 1; k < 4; ++k) {
        Eigen::Matrix2d A;
        A.col(0) = f[static_cast<size_t>(j)].a - f[static_cast<size_t>(i)].a;
        A.col(1) = f[static_cast<size_t>(k)].a - f[static_cast<size_t>(i)].a;
        const Eigen::Vector2d w = A.partialPivLu().solve(-Eigen::Vector2d(f[static_cast<size_t>(i)].a));
        if (w(0) > 0 && w(1) > 0 && w(0) + w(1) < 1) ++expected;
      }
    }
  }
  CHECK(static_cast<int>(quads.size()) == expected);
  for (const auto& s3 : quads) {
    CHECK(s3.vertices().size() == 3);
    for (const auto& v : g.vertices()) CHECK(s3.contains(v));
  }
  const auto simplex3 = shapes::standard_simplex(3);
  CHECK(circumscribed_simplices(simplex3).size() == 1);
  CHECK_THROWS_AS(circumscribed_simplices(shapes::cube(2)), ComputeError);
}

TEST_CASE("measures") {
  const auto sq = shapes::box(v2(0, 0), v2(1, 1));
  CHECK(measure(sq, Measure::area) == doctest::Approx(1.0));
  CHECK(measure(sq, Measure::perimeter) == doctest::Approx(4.0));
  CHECK(measure(shapes::cross_polytope(2, 0.5), Measure::volume) == doctest::Approx(0.5));
  CHECK(measure(shapes::cube(3, 1.0), Measure::volume) == doctest::Approx(8.0));
  CHECK(measure(shapes::standard_simplex(3), Measure::volume) == doctest::Approx(1.0 / 6));
  CHECK_THROWS_AS(measure(shapes::cube(3), Measure::area), InputError);
  CHECK_THROWS_AS(measure(shapes::cube(4), Measure::volume), InputError);

  std::mt19937_64 rng(2);
  for (int i = 0; i < 10; ++i) {
    const auto p = random_polytope(rng, 3, 12);
    const double v = measure(p, Measure::volume);
    CHECK(measure(p.scaled(1.7), Measure::volume) == doctest::Approx(std::pow(1.7, 3) * v).epsilon(1e-9));
  }
}

TEST_CASE("edges") {
  CHECK(shapes::cube(3).edges().size() == 12);
  CHECK(shapes::standard_simplex(4).edges().size() == 10);
  CHECK(shapes::regular_polygon(7).edges().size() == 7);
}

TEST_CASE("property: polar is an involution") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const int d = 2 + i % 2;
    const auto p = random_polytope(rng, d, 6 + i % 7);
    CHECK(same_vertex_set(polar(polar(p)), p, 1e-7));
  }
}

TEST_CASE("property: support is subadditive") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const int d = 2 + i % 3;
    const auto p = random_polytope(rng, d, 10);
    const Vec u = nonsep::testing::gaussian_vec(rng, d);
    const Vec w = nonsep::testing::gaussian_vec(rng, d);
    CHECK(p.support(u + w) <= p.support(u) + p.support(w) + 1e-12);
  }
}

TEST_CASE("property: facet/vertex round trip") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 30; ++i) {
    const int d = 2 + i % 2;
    const auto p = random_polytope(rng, d, 5 + i % 9);
    CHECK(p.invariant_violation().empty());
    const auto q = Polytope::from_facets(p.facets());
    CHECK(same_vertex_set(p, q, 1e-7));
  }
}

TEST_CASE("property: contains_translate agrees with a translation grid search") {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> s(0.3, 1.3);
  const double h = 0.02;
  int ambiguous = 0;
  for (int i = 0; i < 50; ++i) {
    const auto outer = random_polygon(rng, 6);
    const auto inner = random_polygon(rng, 4).scaled(s(rng));
    const auto lp = contains_translate(outer, inner);
    const bool grid = grid_fits(outer, inner, h);
    if (grid) CHECK(lp.contained);
    if (lp.margin > h) CHECK(grid);
    if (lp.contained != grid) ++ambiguous;
  }
  CHECK(ambiguous <= 2);
}

TEST_CASE("property: genericize is generic and contains its input") {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 20; ++i) {
    const int d = 2 + i % 2;
    const auto p = random_polytope(rng, d, 6);
    const auto g = genericize(p, 0.02, static_cast<std::uint64_t>(i));
    CHECK(is_generic(g.polytope));
    for (const auto& v : p.vertices()) CHECK(g.polytope.contains(v));
  }
}
