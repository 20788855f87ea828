#include "doctest.h"

#include "nonsep/combinatorics.hpp"
#include "nonsep/lp.hpp"

#include <optional>
#include <random>

using namespace nonsep;

namespace {

Vec v1(double a) { Vec v(1); v << a; return v; }
Vec v2(double a, double b) { Vec v(2); v << a, b; return v; }

// Brute-force 2-variable LP: the optimum of a bounded feasible LP sits at the
// intersection of two tight constraints.
std::optional<double> brute_force_max(const std::vector<Vec>& rows, const std::vector<double>& rhs, const Vec& c) {
  std::optional<double> best;
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = i + 1; j < rows.size(); ++j) {
      Eigen::Matrix2d A;
      A << rows[i](0), rows[i](1), rows[j](0), rows[j](1);
      if (std::abs(A.determinant()) < 1e-9) continue;
      const Eigen::Vector2d x = A.partialPivLu().solve(Eigen::Vector2d(rhs[i], rhs[j]));
      bool ok = true;
      for (size_t k = 0; k < rows.size(); ++k) ok = ok && rows[k].dot(Vec(x)) <= rhs[k] + 1e-9;
      if (ok) {
        const double val = c.dot(Vec(x));
        if (!best || val > *best) best = val;
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("one-variable box") {
  LinearProgram lp(1);
  lp.add_constraint(v1(1), Relation::le, 3);
  lp.add_constraint(v1(-1), Relation::le, 0);
  lp.set_objective(v1(1));
  const auto r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == doctest::Approx(3.0));
  CHECK(r.x(0) == doctest::Approx(3.0));
}

TEST_CASE("contradictory bounds are infeasible") {
  LinearProgram lp(1);
  lp.add_constraint(v1(1), Relation::le, -1);
  lp.add_constraint(v1(-1), Relation::le, -2);
  lp.set_objective(v1(1));
  CHECK(solve_lp(lp).status == LpStatus::infeasible);
}

TEST_CASE("simplex face") {
  LinearProgram lp(2);
  lp.add_constraint(v2(1, 1), Relation::le, 1);
  lp.set_all_nonnegative();
  lp.set_objective(v2(1, 1));
  const auto r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == doctest::Approx(1.0));
  CHECK(r.max_violation <= 1e-9);
}

TEST_CASE("unbounded and equality rows") {
  LinearProgram lp(2);
  lp.add_constraint(v2(1, -1), Relation::eq, 0);
  lp.set_objective(v2(1, 0));
  CHECK(solve_lp(lp).status == LpStatus::unbounded);

  LinearProgram eq(2);
  eq.add_constraint(v2(1, -1), Relation::eq, 0);
  eq.add_constraint(v2(1, 1), Relation::ge, 2);
  eq.add_constraint(v2(1, 0), Relation::le, 5);
  eq.set_objective(v2(-1, -1));
  const auto r = solve_lp(eq);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == doctest::Approx(-2.0));
  CHECK(r.x(0) == doctest::Approx(1.0));
}

TEST_CASE("minimize sense and redundant equalities") {
  LinearProgram lp(2);
  lp.add_constraint(v2(1, 1), Relation::eq, 1);
  lp.add_constraint(v2(2, 2), Relation::eq, 2);
  lp.set_all_nonnegative();
  lp.set_objective(v2(3, 1), Sense::minimize);
  const auto r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == doctest::Approx(1.0));
  CHECK(r.x(1) == doctest::Approx(1.0));
}

TEST_CASE("dimension mismatch and NaN are input errors") {
  LinearProgram lp(2);
  CHECK_THROWS_AS(lp.add_constraint(v1(1), Relation::le, 1), InputError);
  CHECK_THROWS_AS(lp.add_constraint(v2(std::nan(""), 1), Relation::le, 1), InputError);
  CHECK_THROWS_AS(lp.set_objective(v1(1)), InputError);
}

TEST_CASE("random 2-variable LPs agree with vertex enumeration") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(0.1, 2.0);
  int optimal = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Vec> rows;
    std::vector<double> rhs;
    LinearProgram lp(2);
    const int m = 3 + trial % 8;
    for (int i = 0; i < m; ++i) {
      Vec a = v2(g(rng), g(rng));
      double b = (trial % 5 == 0) ? g(rng) : u(rng);
      rows.push_back(a);
      rhs.push_back(b);
      lp.add_constraint(a, Relation::le, b);
    }
    // Bounding box keeps the oracle's answer finite.
    for (const auto& a : {v2(1, 0), v2(-1, 0), v2(0, 1), v2(0, -1)}) {
      rows.push_back(a);
      rhs.push_back(10);
      lp.add_constraint(a, Relation::le, 10);
    }
    const Vec c = v2(g(rng), g(rng));
    lp.set_objective(c);
    const auto r = solve_lp(lp);
    const auto oracle = brute_force_max(rows, rhs, c);
    if (oracle) {
      REQUIRE(r.status == LpStatus::optimal);
      CHECK(r.value == doctest::Approx(*oracle).epsilon(1e-7));
      CHECK(r.max_violation <= 1e-8);
      ++optimal;
    } else {
      CHECK(r.status == LpStatus::infeasible);
    }
  }
  CHECK(optimal > 100);
}

TEST_CASE("combination helpers") {
  CHECK(binomial(36, 6) == 1947792);
  CHECK(binomial(5, 7) == 0);
  std::vector<int> idx{0, 1, 2};
  std::uint64_t count = 1;
  while (next_combination(idx, 6)) {
    CHECK(unrank_combination(count, 6, 3) == idx);
    ++count;
  }
  CHECK(count == binomial(6, 3));
}
