#include "doctest.h"

#include "nonsep/combinatorics.hpp"
#include "nonsep/cubes.hpp"
#include "nonsep/separability.hpp"
#include "nonsep/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace nonsep;

namespace {

IntegerCubeFamily fam(int d, std::vector<Cell> cells) { return {d, std::move(cells)}; }

IntegerCubeFamily f5() { return fam(2, {{1, 0}, {4, 1}, {3, 4}, {0, 3}, {2, 2}}); }

// Same family as real translates of the unit cube, for the geometric deciders.
HomotheticFamily as_homothets(const IntegerCubeFamily& f) {
  std::vector<Member> ms;
  for (const auto& o : f.offsets) {
    Vec x(f.d);
    for (int j = 0; j < f.d; ++j) x(j) = static_cast<double>(o[static_cast<size_t>(j)]);
    ms.push_back({x, 1.0});
  }
  return {shapes::box(Vec::Zero(f.d), Vec::Ones(f.d)), ms};
}

double polytope_measure(const IntegerCubeFamily& f, Measure m) {
  return measure(Polytope::from_vertices(cube_corners(f)), m);
}

IntegerCubeFamily random_family(std::mt19937_64& rng, int d, int n, int span) {
  std::uniform_int_distribution<int> u(0, span - 1);
  IntegerCubeFamily f{d, {}};
  while (f.size() < n) {
    Cell c(static_cast<size_t>(d));
    for (auto& x : c) x = u(rng);
    if (std::find(f.offsets.begin(), f.offsets.end(), c) == f.offsets.end()) f.offsets.push_back(c);
  }
  return f;
}

// Plain scan of every n-subset of the grid, no symmetry reduction. The hull
// comes from the polytope module unless `integer_hull` is set.
double brute_max(int n, int g, Measure m, bool integer_hull = false) {
  std::vector<int> idx(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
  double best = 0.0;
  do {
    IntegerCubeFamily f{2, {}};
    for (int c : idx) f.offsets.push_back({c / g, c % g});
    if (!cube_is_wns(f)) continue;
    best = std::max(best, integer_hull ? hull_objective(f, m) : polytope_measure(f, m));
  } while (next_combination(idx, g * g));
  return best;
}

}  // namespace

TEST_CASE("wns examples") {
  CHECK(cube_is_wns(f5()));
  CHECK_FALSE(cube_is_wns(fam(2, {{0, 0}, {2, 2}})));
  CHECK(cube_is_wns(fam(2, {{0, 0}, {1, 1}})));
  CHECK(cube_is_wns(fam(3, {{5, -1, 2}})));
  CHECK_THROWS_AS(cube_is_wns(fam(2, {{0, 0}, {0, 0}})), InputError);
  CHECK_THROWS_AS(cube_is_wns(fam(2, {})), InputError);
  CHECK_THROWS_AS(cube_is_wns(fam(2, {{0, 0, 0}})), InputError);
}

TEST_CASE("integer wns agrees with the interval sweep") {
  std::mt19937_64 rng(11);
  int yes = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + trial % 2;
    const int n = 2 + trial % 5;
    const auto f = random_family(rng, d, n, d == 2 ? 4 : 3);
    const bool w = cube_is_wns(f);
    CHECK(w == is_wns(as_homothets(f)).wns);
    yes += w;
  }
  CHECK(yes > 30);
  CHECK(yes < 270);
}

TEST_CASE("bounding box") {
  const auto b = bounding_box(f5());
  CHECK(b.lo == Cell{0, 0});
  CHECK(b.hi == Cell{5, 5});
  const auto one = bounding_box(fam(2, {{3, -2}}));
  CHECK(one.lo == Cell{3, -2});
  CHECK(one.hi == Cell{4, -1});
  const auto row = bounding_box(fam(2, {{0, 0}, {1, 0}}));
  CHECK(row.hi == Cell{2, 1});
  CHECK(row.extent(0) == 2);
  CHECK(row.extent(1) == 1);
}

TEST_CASE("hull metrics") {
  const auto m4 = hull_metrics(construct_extremal(4));
  CHECK(m4.doubled_area == 24);
  CHECK(m4.perimeter == doctest::Approx(4 + 4 * std::sqrt(5.0)).epsilon(1e-12));
  const auto m5 = hull_metrics(f5());
  CHECK(m5.doubled_area == 38);
  CHECK(m5.perimeter == doctest::Approx(4 + 4 * std::sqrt(10.0)).epsilon(1e-12));
  for (int n = 1; n <= 6; ++n) {
    IntegerCubeFamily row{2, {}};
    for (int k = 0; k < n; ++k) row.offsets.push_back({k, 0});
    const auto m = hull_metrics(row);
    CHECK(m.area == n);
    CHECK(m.perimeter == doctest::Approx(2.0 * n + 2.0));
  }
}

TEST_CASE("hull metrics match the polytope hull on random families") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_family(rng, 2, 1 + trial % 7, 6);
    const auto m = hull_metrics(f);
    CHECK(m.area == doctest::Approx(polytope_measure(f, Measure::area)).epsilon(1e-12));
    CHECK(m.perimeter == doctest::Approx(polytope_measure(f, Measure::perimeter)).epsilon(1e-12));
  }
}

TEST_CASE("extremal construction attains both formulas") {
  CHECK(construct_extremal(5).offsets == f5().offsets);
  CHECK(construct_extremal(4).offsets == std::vector<Cell>{{1, 0}, {3, 1}, {2, 3}, {0, 2}});
  for (int n = 4; n <= 12; ++n) {
    const auto f = construct_extremal(n);
    CHECK(f.size() == n);
    CHECK(cube_is_wns(f));
    const auto b = bounding_box(f);
    CHECK(b.lo == Cell{0, 0});
    CHECK(b.hi == Cell{n, n});
    const auto m = hull_metrics(f);
    CHECK(m.doubled_area == 2 * (static_cast<std::int64_t>(n) * n - 2 * n + 4));
    CHECK(std::abs(m.perimeter - (4 + 4 * std::sqrt(n * n - 4.0 * n + 5))) <= 1e-9);
  }
  CHECK(extremal_area(6) == 28);
  CHECK(extremal_perimeter(6) == doctest::Approx(20.4924).epsilon(1e-5));
  CHECK_THROWS_AS(construct_extremal(3), InputError);
}

TEST_CASE("exhaustive search matches an unreduced scan at n = 4") {
  for (auto m : {Measure::area, Measure::perimeter}) {
    const auto r = exhaustive_max(4, m);
    CHECK(r.value == doctest::Approx(brute_max(4, 4, m)).epsilon(1e-12));
    CHECK(r.subsets == 1820);
    CHECK(r.evaluated > 0);
  }
  CHECK(exhaustive_max(4, Measure::area).doubled_area == 24);
}

TEST_CASE("exhaustive search at n = 5 and its invariants") {
  const auto a = exhaustive_max(5, Measure::area);
  CHECK(a.doubled_area == 38);
  const auto p = exhaustive_max(5, Measure::perimeter);
  CHECK(p.value == doctest::Approx(brute_max(5, 5, Measure::perimeter, true)).epsilon(1e-12));
  for (const auto* r : {&a, &p}) {
    CHECK(cube_is_wns(r->best));
    const auto b = bounding_box(r->best);
    CHECK(b.extent(0) == 5);
    CHECK(b.extent(1) == 5);
    CHECK(std::is_sorted(r->best.offsets.begin(), r->best.offsets.end()));
  }
}

// Hand-checked hulls: the perimeter maximum sits above the diagonal
// construction, while area stays at n^2 - 2n + 4.
TEST_CASE("perimeter witnesses beat the corner construction") {
  const auto w4 = fam(2, {{0, 0}, {1, 3}, {2, 2}, {3, 1}});
  CHECK(cube_is_wns(w4));
  CHECK(hull_metrics(w4).perimeter == doctest::Approx(4 + 2 * std::sqrt(10.0) + 2 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(hull_metrics(w4).perimeter > extremal_perimeter(4) + 0.2);
  CHECK(exhaustive_max(4, Measure::perimeter).value == doctest::Approx(hull_metrics(w4).perimeter).epsilon(1e-12));

  const auto w5 = fam(2, {{0, 0}, {1, 4}, {2, 2}, {3, 3}, {4, 1}});
  CHECK(cube_is_wns(w5));
  CHECK(hull_metrics(w5).perimeter == doctest::Approx(4 + 2 * std::sqrt(17.0) + 2 * std::sqrt(5.0)).epsilon(1e-12));
  CHECK(exhaustive_max(5, Measure::perimeter).value == doctest::Approx(hull_metrics(w5).perimeter).epsilon(1e-12));
  CHECK(hull_metrics(w5).area <= extremal_area(5));
}

TEST_CASE("parallel and serial searches agree exactly") {
  for (auto m : {Measure::area, Measure::perimeter}) {
    const auto par = exhaustive_max(5, m);
    const auto ser = serial::exhaustive_max(5, m);
    CHECK(par.best.offsets == ser.best.offsets);
    CHECK(par.value == ser.value);
    CHECK(par.evaluated == ser.evaluated);
  }
}

TEST_CASE("a larger box does not beat the n x n box at n = 4") {
  for (auto m : {Measure::area, Measure::perimeter}) {
    const auto big = exhaustive_max(4, m, 5);
    const auto tight = exhaustive_max(4, m);
    CHECK(big.value == doctest::Approx(tight.value).epsilon(1e-12));
  }
}

TEST_CASE("search preconditions") {
  CHECK_THROWS_AS(exhaustive_max(3, Measure::area), InputError);
  CHECK_THROWS_AS(exhaustive_max(7, Measure::area), InputError);
  CHECK_THROWS_AS(exhaustive_max(4, Measure::volume), InputError);
  CHECK_THROWS_AS(exhaustive_max(4, Measure::area, 3), InputError);
}

TEST_CASE("shadow normalization examples") {
  const auto two = shadow_normalize(fam(2, {{0, 0}, {0, 1}}), Measure::area);
  CHECK(two.full_box);
  CHECK(two.steps.size() == 1);
  const auto& o = two.family.offsets;
  CHECK(o[0][0] != o[1][0]);
  CHECK(o[0][1] != o[1][1]);
  CHECK(hull_metrics(two.family).area == 3.0);

  const auto fixed = shadow_normalize(f5(), Measure::area);
  CHECK(fixed.steps.empty());
  CHECK(fixed.family.offsets == f5().offsets);

  for (int n = 3; n <= 7; ++n) {
    IntegerCubeFamily col{2, {}};
    for (int k = 0; k < n; ++k) col.offsets.push_back({0, k});
    for (auto m : {Measure::area, Measure::perimeter}) {
      const auto r = shadow_normalize(col, m);
      CHECK(r.full_box);
      CHECK(cube_is_wns(r.family));
      CHECK(hull_objective(r.family, m) > hull_objective(col, m));
      if (n >= 4 && n <= 6) CHECK(hull_objective(r.family, m) <= exhaustive_max(n, m).value + 1e-9);
    }
  }
  CHECK_THROWS_AS(shadow_normalize(fam(2, {{0, 0}, {2, 2}}), Measure::area), InputError);
  CHECK_THROWS_AS(shadow_normalize(fam(3, {{0, 0, 0}, {0, 0, 1}}), Measure::area), InputError);
}

TEST_CASE("shadow steps never lose objective on random wns families") {
  std::mt19937_64 rng(5);
  int runs = 0, solid = 0;
  for (int trial = 0; trial < 400 && runs < 60; ++trial) {
    const int d = trial % 8 == 0 ? 3 : 2;
    const auto f = random_family(rng, d, 3 + trial % 4, 3);
    if (!cube_is_wns(f)) continue;
    ++runs;
    solid += d == 3;
    const auto m = d == 3 ? Measure::volume : (trial % 2 ? Measure::area : Measure::perimeter);
    const auto r = shadow_normalize(f, m);
    double prev = hull_objective(f, m);
    for (const auto& s : r.steps) {
      CHECK(s.before == doctest::Approx(prev));
      CHECK(s.after >= s.before - 1e-9);
      prev = s.after;
    }
    CHECK(r.full_box);
    CHECK(cube_is_wns(r.family));
    CHECK(hull_objective(r.family, m) == doctest::Approx(prev));
  }
  CHECK(runs >= 30);
  CHECK(solid >= 3);
}
