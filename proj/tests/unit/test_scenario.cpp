#include "doctest.h"

#include "nonsep/scenario.hpp"
#include "nonsep/shapes.hpp"

#include <cmath>

using namespace nonsep;
using io::json;

namespace {

json square_family() {
  return json::parse(R"({
    "base": {"vertices": [[0, 0], [1, 0], [1, 1], [0, 1]]},
    "members": [{"x": [1, 0]}, {"x": [4, 1]}, {"x": [3, 4]}, {"x": [0, 3]}, {"x": [2, 2]}]
  })");
}

double result(const ScenarioOutcome& o, const char* key) { return o.report.at("results").at(key).get<double>(); }

}  // namespace

TEST_CASE("polytope json round trip") {
  const auto p = shapes::regular_polygon(5, 1.3, 0.2);
  const auto q = io::polytope_from_json(io::to_json(p));
  CHECK(q.vertices().size() == 5);
  CHECK(q.facets().size() == 5);
  for (size_t i = 0; i < p.vertices().size(); ++i) {
    CHECK((p.vertices()[i] - q.vertices()[i]).norm() <= 1e-12);
  }
  // facets only and vertices only describe the same square
  const auto hs = io::polytope_from_json(json::parse(R"({"facets": [{"a": [1, 0], "b": 1}, {"a": [-1, 0], "b": 0},
                                                                    {"a": [0, 2], "b": 2}, {"a": [0, -1], "b": 0}]})"));
  CHECK(hs.vertices().size() == 4);
  CHECK(measure(hs, Measure::area) == doctest::Approx(1.0));
  CHECK(io::polytope_from_json(json::parse(R"({"shape": "cross", "d": 3})")).vertices().size() == 6);
}

TEST_CASE("schema violations are input errors") {
  CHECK_THROWS_AS(io::polytope_from_json(json::parse(R"({"vertices": [[0, 0], [1, 0]]})")), InputError);
  CHECK_THROWS_AS(io::polytope_from_json(json::parse(R"({"vertices": [[0, 0], [1, 0, 2], [0, 1]]})")), InputError);
  CHECK_THROWS_AS(io::polytope_from_json(json::parse(R"({"vertices": [[0, "a"], [1, 0], [0, 1]]})")), InputError);
  CHECK_THROWS_AS(io::polytope_from_json(json::parse(R"({"dim": 3, "vertices": [[0, 0], [1, 0], [0, 1]]})")), InputError);
  CHECK_THROWS_AS(io::polytope_from_json(json::parse(R"({"shape": "dodecahedron"})")), InputError);
  CHECK_THROWS_AS(io::polytope_from_json(json::parse("[]")), InputError);
  CHECK_THROWS_AS(io::family_from_json(json::parse(R"({"base": {"shape": "cube"}, "members": [{"x": [0, 0]}]})")), InputError);
  CHECK_THROWS_AS(io::family_from_json(json::parse(R"({"base": {"shape": "cube"}, "members": [{"x": [0, 0]}, {"x": [1, 0], "tau": -1}]})")),
                  InputError);
  CHECK_THROWS_AS(io::lattice_from_json(json::parse(R"({"basis": [[1, 0], [2, 0]]})")), std::exception);
  CHECK_THROWS_AS(io::lattice_from_json(json::parse(R"({"basis": [[1, 0, 0], [0, 1, 0]]})")), InputError);
  CHECK_THROWS_AS(io::cubes_from_json(json::parse(R"({"d": 2, "offsets": [[0, 0.5]]})")), InputError);
  CHECK_THROWS_AS(io::cubes_from_json(json::parse(R"({"d": 2, "offsets": [[0, 0], [0, 0]]})")), InputError);
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), InputError);
  CHECK_THROWS_AS(scenario_from_json(json::parse(R"({"params": {}})")), InputError);
  CHECK_THROWS_AS(scenario_from_json(json::parse(R"({"kind": "weather", "params": {}})")), InputError);
  CHECK_THROWS_AS(scenario_from_json(json::parse(R"({"kind": "cubes", "params": {}})")), InputError);
  CHECK_THROWS_AS(scenario_from_json(json::parse(R"({"kind": "lattice", "params": {"basis": [[1]]}})")), InputError);
}

TEST_CASE("family, lattice, cube and ball round trips") {
  const auto f = io::family_from_json(square_family());
  CHECK(f.size() == 5);
  const auto g = io::family_from_json(io::to_json(f));
  for (int i = 0; i < 5; ++i) CHECK((g.member(i).x - f.member(i).x).norm() == 0.0);

  const auto l = io::lattice_from_json(json::parse(R"({"basis": [[1, 1], [1, -1]]})"));
  CHECK(l.basis()(1, 0) == 1.0);
  CHECK(l.basis()(1, 1) == -1.0);
  CHECK(std::abs(l.det()) == doctest::Approx(2.0));
  CHECK(io::lattice_from_json(io::to_json(l)).basis() == l.basis());

  const IntegerCubeFamily c{2, {{1, 0}, {4, 1}}};
  CHECK(io::cubes_from_json(io::to_json(c)).offsets == c.offsets);
  const auto b = io::balls_from_json(json::parse(R"({"centers": [[0, 0], [2, 0]], "radii": [1, 1]})"));
  CHECK(b.size() == 2);
  CHECK(io::balls_from_json(io::to_json(b)).radii == b.radii);
}

TEST_CASE("scenario examples") {
  const auto cubes = run_scenario(scenario_from_json({{"kind", "cubes"}, {"params", {{"n", 5}, {"objective", "area"}}}}));
  CHECK(cubes.passed());
  CHECK(result(cubes, "value") == 19.0);
  CHECK(cubes.csv.rfind("k,x,y\n", 0) == 0);

  const auto sigma = run_scenario(scenario_from_json(
      {{"kind", "sigma"}, {"params", {{"polytope", {{"vertices", {{0, 0}, {1, 0}, {0, 1}}}}}, {"expect", 2}}}}));
  CHECK(sigma.passed());
  CHECK(result(sigma, "sigma") == doctest::Approx(2.0).epsilon(1e-9));

  const auto chess = run_scenario(scenario_from_json(json::parse(R"({"kind": "lattice", "params": {
      "task": "tightness", "body": {"shape": "cube", "half": 0.5}, "basis": [[1, 1], [1, -1]], "expect": 1}})")));
  CHECK(chess.passed());
  const auto t = chess.report.at("results").at("tightness");
  CHECK(t.at("lower").get<double>() <= 1.0 + 1e-12);
  CHECK(t.at("upper").get<double>() >= 1.0 - 1e-12);

  const auto cover = run_scenario(scenario_from_json({{"kind", "covering"}, {"params", {{"family", square_family()}, {"expect_lambda", 1}}}}));
  CHECK(cover.passed());
  CHECK(cover.checks.size() >= 5);
}

TEST_CASE("failed checks are reported") {
  const auto o = run_scenario(scenario_from_json(
      {{"kind", "sigma"}, {"params", {{"polytope", {{"shape", "cube"}}}, {"expect", 3}}}}));
  CHECK_FALSE(o.passed());
  REQUIRE(o.failed().size() == 1);
  CHECK(o.failed()[0] == "sigma matches expect");
  CHECK(o.report.at("passed") == false);

  const auto sep = run_scenario(scenario_from_json(json::parse(R"({"kind": "covering", "params": {"family": {
      "base": {"shape": "cube"}, "members": [{"x": [0, 0]}, {"x": [5, 0]}]}}})")));
  CHECK_FALSE(sep.passed());
  CHECK(sep.report.at("results").contains("witness"));
}

TEST_CASE("same seed gives identical csv") {
  const auto stab = scenario_from_json(json::parse(R"({"kind": "stability", "params": {
      "taus": [1, 0.5, 2], "deltas": [0.1, 0.03, 0.01, 0.003, 0.001]}})"));
  CHECK(run_scenario(stab).csv == run_scenario(stab).csv);
  CHECK(run_scenario(stab).passed());

  auto mu = scenario_from_json(json::parse(R"({"kind": "lattice", "seed": 11, "params": {
      "task": "mu1w", "body": {"shape": "cube", "half": 1}, "basis": [[1, 0.3], [0.1, 1]],
      "t_grid": [0, 0.1, 0.2, 0.3], "window": 10, "samples": 500}})"));
  const auto a = run_scenario(mu);
  CHECK(a.csv == run_scenario(mu).csv);
  CHECK(a.csv.rfind("t,hit_fraction,miss_margin\n", 0) == 0);
  CHECK(a.passed());
}
