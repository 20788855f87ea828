#include "nonsep/asymmetry.hpp"
#include "nonsep/scenario.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <map>

using namespace nonsep;
using io::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

struct Globals {
  std::uint64_t seed = 1;
  double tol = 0.0;
  std::string out;

  Tolerance tolerance() const {
    Tolerance t;
    if (tol > 0.0) t.geom = t.gap = tol;
    return t;
  }
};

void emit(const Globals& g, const json& j) {
  if (g.out.empty()) std::cout << j.dump(2) << '\n';
  else io::write_text_file(g.out, j.dump(2) + "\n");
}

void emit_text(const Globals& g, const std::string& text) {
  if (g.out.empty()) std::cout << text;
  else io::write_text_file(g.out, text);
}

int cmd_run(const Globals& g, const std::string& path) {
  auto s = scenario_from_json(io::read_json_file(path));
  if (g.seed != 1) s.seed = g.seed;
  std::string stem = !g.out.empty() ? g.out : s.output;
  if (stem.empty()) stem = (std::filesystem::path(path).parent_path() / std::filesystem::path(path).stem()).string() + ".report";
  const auto o = run_scenario(s, g.tolerance());
  write_outcome(o, stem);
  std::cout << s.kind << ": " << (o.passed() ? "pass" : "FAIL") << " (" << stem << ".json, " << stem << ".csv)\n";
  for (const auto& f : o.failed()) std::cout << "  failed: " << f << '\n';
  return o.passed() ? kPass : kFail;
}

int cmd_family(const Globals& g, const std::string& what, const std::string& path) {
  const auto f = io::family_from_json(io::read_json_file(path), g.tolerance());
  if (what == "cover") {
    const auto c = weighted_cover(f);
    emit(g, io::to_json(c));
    return c.certified ? kPass : kFail;
  }
  if (what == "lambda") {
    const auto c = lambda_min(f);
    emit(g, io::to_json(c));
    return c.certified ? kPass : kFail;
  }
  if (what == "wns") {
    const auto r = is_wns(f);
    json j = {{"wns", r.wns}};
    if (r.witness) j["witness"] = io::to_json(*r.witness);
    emit(g, j);
    return kPass;
  }
  if (what == "ns") {
    const auto r = is_ns(f);
    json j = {{"ns", r.ns}};
    if (!r.ns) j["part"] = r.part;
    emit(g, j);
    return kPass;
  }
  // summand
  const auto r = wip_summand_check(f);
  json j = {{"summand", r.summand}, {"lambda", r.lambda}};
  if (r.detail.failing_direction) j["failing_direction"] = io::to_json(*r.detail.failing_direction);
  if (r.detail.failing_edge) j["failing_edge"] = {r.detail.failing_edge->first, r.detail.failing_edge->second};
  emit(g, j);
  return kPass;
}

int cmd_sigma(const Globals& g, const std::string& path) {
  const auto p = io::polytope_from_json(io::read_json_file(path), g.tolerance());
  const auto r = sigma_lp(p);
  emit(g, {{"sigma", r.sigma}, {"q", io::to_json(r.center)}});
  return kPass;
}

struct LatticeArgs {
  std::string task;
  std::string path;
  double resolution = 0.01;
  int window = 50;
  int samples = 10000;
  double t_max = 0.5;
};

int cmd_lattice(const Globals& g, const LatticeArgs& a) {
  json params = io::read_json_file(a.path);
  params["task"] = a.task;
  if (a.task == "tightness") {
    params["width"] = a.resolution;
  } else if (a.task == "mu1w") {
    params["resolution"] = a.resolution;
    params["window"] = a.window;
    params["samples"] = a.samples;
    params["t_max"] = a.t_max;
  }
  const Scenario s{"lattice", params, g.seed, ""};
  const auto o = run_scenario(s, g.tolerance());
  if (a.task == "mu1w") emit_text(g, o.csv);
  else emit(g, o.report.at("results"));
  return o.passed() ? kPass : kFail;
}

int cmd_cubes(const Globals& g, const std::string& mode, int n, const std::string& objective) {
  const Scenario s{"cubes", {{"n", n}, {"objective", objective}, {"mode", mode}}, g.seed, ""};
  const auto o = run_scenario(s);
  emit(g, o.report.at("results"));
  return o.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-separable families of homothets: deciders, covers and experiments"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--tol", g.tol, "Geometric tolerance (default 1e-9)")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Output file (report stem for run)");

  std::string path;
  auto* run = app.add_subcommand("run", "Run a scenario file; writes <stem>.json and <stem>.csv");
  run->add_option("scenario", path, "Scenario JSON")->required();

  std::map<std::string, CLI::App*> family_cmds;
  for (const auto* name : {"cover", "lambda", "wns", "ns", "summand"}) {
    auto* c = app.add_subcommand(name, std::string(name) + " on a family JSON");
    c->add_option("family", path, "Family JSON")->required();
    family_cmds[name] = c;
  }
  auto* sigma = app.add_subcommand("sigma", "Minkowski asymmetry of a polytope JSON");
  sigma->add_option("polytope", path, "Polytope JSON")->required();

  LatticeArgs la;
  auto* lattice = app.add_subcommand("lattice", "Lattice arrangements: tightness | ns | mu1w");
  lattice->add_option("task", la.task, "tightness, ns or mu1w")->required()->check(CLI::IsMember({"tightness", "ns", "mu1w"}));
  lattice->add_option("arrangement", la.path, "JSON with body and basis")->required();
  lattice->add_option("--resolution", la.resolution, "Bracket width (tightness) or t step (mu1w)")->capture_default_str();
  lattice->add_option("--window", la.window, "Lattice window radius for mu1w")->capture_default_str();
  lattice->add_option("--samples", la.samples, "Sampled flats per t for mu1w")->capture_default_str();
  lattice->add_option("--t-max", la.t_max, "Largest t for mu1w")->capture_default_str();

  std::string cube_mode;
  int cube_n = 5;
  std::string objective = "area";
  auto* cubes = app.add_subcommand("cubes", "Integer WNS unit-square families: search | extremal");
  cubes->add_option("mode", cube_mode, "search or extremal")->required()->check(CLI::IsMember({"search", "extremal"}));
  cubes->add_option("--n", cube_n, "Number of squares")->capture_default_str();
  cubes->add_option("--objective", objective, "area or perimeter")->capture_default_str()->check(CLI::IsMember({"area", "perimeter"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*run) return cmd_run(g, path);
    for (const auto& [name, c] : family_cmds) {
      if (*c) return cmd_family(g, name, path);
    }
    if (*sigma) return cmd_sigma(g, path);
    if (*lattice) return cmd_lattice(g, la);
    if (*cubes) return cmd_cubes(g, cube_mode, cube_n, objective);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const ComputeError& e) {
    std::cerr << "computation failed: " << e.what() << '\n';
    return kFail;
  }
  return kInput;
}
