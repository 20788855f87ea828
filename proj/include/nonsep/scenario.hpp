#pragma once

#include "nonsep/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nonsep {

/// {"kind": "stability"|"cubes"|"lattice"|"covering"|"sigma",
///  "params": {...}, "seed": 1, "output": "path/stem"}
struct Scenario {
  std::string kind;
  io::json params;
  std::uint64_t seed = 1;
  std::string output;  ///< report goes to <output>.json, data to <output>.csv
};

/// Checks the kind and the kind-specific parameters; throws InputError.
Scenario scenario_from_json(const io::json& j);

struct Check {
  std::string name;
  bool pass = false;
};

struct ScenarioOutcome {
  io::json report;   ///< inputs, results, checks, seed
  std::string csv;
  std::vector<Check> checks;

  bool passed() const;
  std::vector<std::string> failed() const;
};

/// CSV columns per kind:
///   stability  delta,eps,deviation,used
///   cubes      k,x,y[,z]
///   lattice    tightness: lower,upper,width; ns: lambda1,ns; mu1w: t,hit_fraction,miss_margin
///   covering   quantity,value
///   sigma      method,sigma
ScenarioOutcome run_scenario(const Scenario& s, const Tolerance& tol = {});

/// Writes <stem>.json and <stem>.csv.
void write_outcome(const ScenarioOutcome& o, const std::string& stem);

}  // namespace nonsep
