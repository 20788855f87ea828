#include "nonsep/scenario.hpp"

#include "nonsep/asymmetry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nonsep {
namespace {

using io::json;

struct Builder {
  ScenarioOutcome out;
  json results = json::object();
  std::ostringstream csv;

  void check(const std::string& name, bool pass) { out.checks.push_back({name, pass}); }
};

std::pair<double, double> range_param(const json& p, const char* key, double lo, double hi) {
  if (!p.contains(key)) return {lo, hi};
  const auto& r = p.at(key);
  if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number()) {
    throw InputError(std::string(key) + ": expected [lo, hi]");
  }
  return {r[0].get<double>(), r[1].get<double>()};
}

std::vector<double> numbers(const json& p, const char* key) {
  if (!p.contains(key) || !p.at(key).is_array()) throw InputError(std::string("missing list \"") + key + "\"");
  std::vector<double> xs;
  for (const auto& x : p.at(key)) {
    if (!x.is_number()) throw InputError(std::string(key) + ": expected numbers");
    xs.push_back(x.get<double>());
  }
  return xs;
}

void run_stability(const Scenario& s, Builder& b) {
  const auto& p = s.params;
  const auto taus = numbers(p, "taus");
  const auto deltas = numbers(p, "deltas");
  const auto [dlo, dhi] = range_param(p, "slope_range", 0.4, 0.6);
  const auto [elo, ehi] = range_param(p, "eps_slope_range", 1.9, 2.1);
  const int cube_n = p.value("cube_n", 3);

  const auto fit = stability_exponent(taus, deltas);
  b.csv << "delta,eps,deviation,used\n";
  json rows = json::array();
  double total = 0.0;
  for (double t : taus) total += t;
  bool within = true;
  for (const auto& r : fit.rows) {
    b.csv << io::fmt(r.delta) << ',' << io::fmt(r.eps) << ',' << io::fmt(r.deviation) << ',' << (r.used ? 1 : 0) << '\n';
    rows.push_back({{"delta", r.delta}, {"eps", r.eps}, {"deviation", r.deviation}, {"used", r.used}});
    within = within && r.eps >= -1e-9 * total;
  }
  const auto flat = stability_construction(taus, 0.0);
  const double flat_eps = flat.total_radius() - ball_circumradius(flat).radius;
  const auto cube = cube_chain_counterexample(cube_n);

  b.results["rows"] = rows;
  b.results["deviation_slope"] = fit.deviation_slope;
  b.results["eps_slope"] = fit.eps_slope;
  b.results["straight_chain_eps"] = flat_eps;
  json centers = json::array();
  for (const auto& c : cube.centers) centers.push_back(io::to_json(c));
  b.results["cube_chain"] = {{"n", cube_n},          {"centers", centers}, {"circumradius", cube.circumradius},
                             {"eps", cube.eps},      {"deviation", cube.deviation}, {"ns", cube.ns}};

  b.check("deviation slope within range", fit.deviation_slope >= dlo && fit.deviation_slope <= dhi);
  b.check("eps slope within range", fit.eps_slope >= elo && fit.eps_slope <= ehi);
  b.check("circumradius at most the sum of radii", within);
  b.check("straight chain has eps <= 1e-9", std::abs(flat_eps) <= 1e-9);
  b.check("cube chain has eps = 0", cube.eps == 0.0);
  b.check("cube chain centers are off a line", cube.deviation > 0.1);
  b.check("cube chain is non-separable", cube.ns);
}

void emit_cubes(const IntegerCubeFamily& f, Builder& b) {
  b.csv << (f.d == 3 ? "k,x,y,z\n" : "k,x,y\n");
  for (int k = 0; k < f.size(); ++k) {
    b.csv << k;
    for (auto x : f.offsets[static_cast<size_t>(k)]) b.csv << ',' << x;
    b.csv << '\n';
  }
}

void run_cubes(const Scenario& s, Builder& b) {
  const auto& p = s.params;
  const int n = p.at("n").get<int>();
  const Measure obj = io::objective_from_string(p.value("objective", std::string("area")));
  const std::string mode = p.value("mode", std::string(n <= 6 ? "search" : "extremal"));
  const std::int64_t formula_area = extremal_area(n);
  const double formula_perimeter = extremal_perimeter(n);

  IntegerCubeFamily best;
  double value = 0.0;
  if (mode == "search") {
    const auto r = exhaustive_max(n, obj);
    best = r.best;
    value = r.value;
    b.results["subsets"] = r.subsets;
    b.results["evaluated"] = r.evaluated;
  } else if (mode == "extremal") {
    best = construct_extremal(n);
    value = hull_objective(best, obj);
  } else {
    throw InputError("cubes: mode must be search or extremal");
  }
  const auto m = hull_metrics(best);
  const auto box = bounding_box(best);
  b.results["mode"] = mode;
  b.results["objective"] = io::to_string(obj);
  b.results["family"] = io::to_json(best);
  b.results["value"] = value;
  b.results["area"] = m.area;
  b.results["perimeter"] = m.perimeter;
  b.results["area_formula"] = formula_area;
  b.results["perimeter_formula"] = formula_perimeter;
  b.results["exceeds_perimeter_formula"] = m.perimeter > formula_perimeter + 1e-9;
  emit_cubes(best, b);

  b.check("family is WNS", cube_is_wns(best));
  b.check("bounding box is n x n", box.extent(0) == n && box.extent(1) == n);
  if (mode == "extremal") {
    b.check("area equals n^2 - 2n + 4", m.doubled_area == 2 * formula_area);
    b.check("perimeter equals 4 + 4 sqrt(n^2 - 4n + 5)", std::abs(m.perimeter - formula_perimeter) <= 1e-9);
  } else if (obj == Measure::area) {
    b.check("maximum area equals n^2 - 2n + 4", m.doubled_area == 2 * formula_area);
  } else {
    b.check("maximum perimeter at least the corner construction", value >= formula_perimeter - 1e-9);
  }
  if (p.contains("expect")) b.check("value matches expect", std::abs(value - p.at("expect").get<double>()) <= 1e-9);
}

void run_lattice(const Scenario& s, Builder& b, const Tolerance& tol) {
  const auto& p = s.params;
  const auto a = io::arrangement_from_json(p, tol);
  const std::string task = p.at("task").get<std::string>();
  b.results["task"] = task;
  if (task == "tightness") {
    CoveringOptions opt;
    opt.width = p.value("width", opt.width);
    opt.grid = p.value("grid", opt.grid);
    const auto t = tightness(a, opt);
    b.results["tightness"] = io::to_json(t);
    if (a.body.dim() <= 3) b.results["density"] = density(a);
    b.csv << "lower,upper,width\n" << io::fmt(t.lower) << ',' << io::fmt(t.upper) << ',' << io::fmt(t.width()) << '\n';
    b.check("bracket width within request", t.width() <= opt.width + 1e-12);
    if (p.contains("expect")) {
      const double e = p.at("expect").get<double>();
      b.check("bracket contains expect", t.lower <= e + 1e-12 && e <= t.upper + 1e-12);
    }
  } else if (task == "ns") {
    const auto r = is_ns_lattice(a);
    const auto probe = finite_patch_probe(a, p.value("patch", 30), 8, p.value("random_dirs", 200), s.seed);
    b.results["ns"] = r.ns;
    b.results["lambda1"] = r.lambda1;
    b.results["shortest_dual"] = io::to_json(r.shortest);
    b.results["probe"] = {{"separable", probe.separable}, {"gap", probe.gap}};
    if (probe.separable) b.results["probe"]["direction"] = io::to_json(probe.direction);
    b.csv << "lambda1,ns\n" << io::fmt(r.lambda1) << ',' << (r.ns ? 1 : 0) << '\n';
    b.check("dual criterion agrees with the patch probe", r.ns == !probe.separable);
    if (p.contains("expect")) b.check("ns matches expect", r.ns == p.at("expect").get<bool>());
  } else if (task == "mu1w") {
    std::vector<double> grid;
    if (p.contains("t_grid")) {
      grid = numbers(p, "t_grid");
    } else {
      const double step = p.value("resolution", 0.01);
      const double tmax = p.value("t_max", 0.5);
      if (!(step > 0.0) || !(tmax >= 0.0)) throw InputError("mu1w: need resolution > 0 and t_max >= 0");
      for (int k = 0; k * step <= tmax + 1e-12; ++k) grid.push_back(k * step);
    }
    WeakMinimumOptions opt;
    opt.window = p.value("window", opt.window);
    opt.samples = p.value("samples", opt.samples);
    opt.seed = s.seed;
    const auto rows = weak_covering_minimum_1(a.body, a.lattice, grid, opt);
    b.csv << "t,hit_fraction,miss_margin\n";
    json jr = json::array();
    bool monotone = true;
    for (size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      b.csv << io::fmt(r.t) << ',' << io::fmt(r.hit_fraction) << ',' << io::fmt(r.miss_margin) << '\n';
      jr.push_back({{"t", r.t}, {"hit_fraction", r.hit_fraction}, {"miss_margin", r.miss_margin}});
      if (i > 0 && rows[i].t >= rows[i - 1].t) monotone = monotone && r.hit_fraction >= rows[i - 1].hit_fraction;
    }
    b.results["rows"] = jr;
    b.check("hit fraction nondecreasing in t", monotone);
  } else if (task == "density") {
    const double dn = density(a);
    b.results["density"] = dn;
    b.csv << "density\n" << io::fmt(dn) << '\n';
    if (p.contains("expect")) b.check("density matches expect", std::abs(dn - p.at("expect").get<double>()) <= 1e-9);
  } else {
    throw InputError("lattice: task must be tightness, ns, mu1w or density");
  }
}

void run_covering(const Scenario& s, Builder& b, const Tolerance& tol) {
  const auto& p = s.params;
  const auto f = io::family_from_json(p.at("family"), tol);
  const int d = f.dim();
  const auto wns = is_wns(f);
  b.results["wns"] = wns.wns;
  b.csv << "quantity,value\n";
  b.check("family is WNS", wns.wns);
  if (!wns.wns) {
    b.results["witness"] = io::to_json(*wns.witness);
    return;
  }
  const auto asym = sigma_lp(f.base());
  const auto lam = lambda_min(f);
  const auto sc = sigma_cover(f, asym);
  const double bound = (asym.sigma + 1) / 2;
  b.results["sigma"] = asym.sigma;
  b.results["lambda_min"] = io::to_json(lam);
  b.results["sigma_cover"] = io::to_json(sc);
  b.csv << "sigma," << io::fmt(asym.sigma) << "\nlambda_min," << io::fmt(lam.lambda) << "\nsigma_bound," << io::fmt(bound)
        << '\n';
  b.check("sigma cover certified", sc.certified);
  b.check("lambda_min <= (sigma + 1) / 2", lam.lambda <= bound + 1e-7);
  if (f.base().is_origin_symmetric() || asym.sigma <= 1 + 1e-9) {
    const auto wc = weighted_cover(f);
    b.results["weighted_cover"] = io::to_json(wc);
    b.check("weighted cover certified", wc.certified);
    b.check("lambda_min <= 1", lam.lambda <= 1 + 1e-7);
  }
  if (static_cast<int>(f.base().vertices().size()) == d + 1) {
    b.check("lambda_min <= (d + 1) / 2", lam.lambda <= (d + 1) / 2.0 + 1e-7);
  }
  if (p.contains("expect_lambda")) {
    b.check("lambda matches expect", std::abs(lam.lambda - p.at("expect_lambda").get<double>()) <= 1e-7);
  }
}

void run_sigma(const Scenario& s, Builder& b, const Tolerance& tol) {
  const auto& p = s.params;
  const auto poly = io::polytope_from_json(p.at("polytope"), tol);
  const auto lp = sigma_lp(poly);
  const auto bis = sigma_bisection(poly);
  const auto polar = polar_sigma_check(poly);
  const auto bm = bm_bound_report(poly);
  b.results["sigma"] = lp.sigma;
  b.results["q"] = io::to_json(lp.center);
  b.results["sigma_bisection"] = bis.sigma;
  b.results["polar_ratio"] = polar.polar_ratio;
  b.results["bm"] = {{"eps", bm.eps}, {"applicable", bm.applicable}};
  if (bm.bound) b.results["bm"]["bound"] = *bm.bound;
  b.csv << "method,sigma\nlp," << io::fmt(lp.sigma) << "\nbisection," << io::fmt(bis.sigma) << "\npolar,"
        << io::fmt(polar.polar_ratio) << '\n';
  b.check("LP and bisection agree within 1e-6", std::abs(lp.sigma - bis.sigma) <= 1e-6);
  b.check("polar body has the same asymmetry", polar.pass);
  if (p.contains("expect")) b.check("sigma matches expect", std::abs(lp.sigma - p.at("expect").get<double>()) <= 1e-6);
}

}  // namespace

bool ScenarioOutcome::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<std::string> ScenarioOutcome::failed() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.pass) out.push_back(c.name);
  }
  return out;
}

Scenario scenario_from_json(const io::json& j) {
  try {
    if (!j.is_object()) throw InputError("scenario: expected an object");
    Scenario s;
    s.kind = j.at("kind").get<std::string>();
    s.params = j.value("params", io::json::object());
    s.seed = j.value("seed", std::uint64_t{1});
    s.output = j.value("output", std::string());
    const auto need = [&](std::initializer_list<const char*> keys) {
      for (const char* k : keys) {
        if (!s.params.contains(k)) throw InputError("scenario " + s.kind + ": missing parameter \"" + k + "\"");
      }
    };
    if (s.kind == "stability") need({"taus", "deltas"});
    else if (s.kind == "cubes") need({"n"});
    else if (s.kind == "lattice") need({"body", "basis", "task"});
    else if (s.kind == "covering") need({"family"});
    else if (s.kind == "sigma") need({"polytope"});
    else throw InputError("scenario: unknown kind \"" + s.kind + "\"");
    return s;
  } catch (const io::json::exception& e) {
    throw InputError(std::string("scenario: ") + e.what());
  }
}

ScenarioOutcome run_scenario(const Scenario& s, const Tolerance& tol) {
  Builder b;
  try {
    if (s.kind == "stability") run_stability(s, b);
    else if (s.kind == "cubes") run_cubes(s, b);
    else if (s.kind == "lattice") run_lattice(s, b, tol);
    else if (s.kind == "covering") run_covering(s, b, tol);
    else if (s.kind == "sigma") run_sigma(s, b, tol);
    else throw InputError("scenario: unknown kind \"" + s.kind + "\"");
  } catch (const io::json::exception& e) {
    throw InputError(std::string("scenario ") + s.kind + ": " + e.what());
  }
  json checks = json::array();
  for (const auto& c : b.out.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}});
  b.out.report = {{"kind", s.kind},   {"seed", s.seed},     {"inputs", s.params},
                  {"results", b.results}, {"checks", checks}, {"passed", b.out.passed()}};
  b.out.csv = b.csv.str();
  return b.out;
}

void write_outcome(const ScenarioOutcome& o, const std::string& stem) {
  io::write_text_file(stem + ".json", o.report.dump(2) + "\n");
  io::write_text_file(stem + ".csv", o.csv);
}

}  // namespace nonsep
