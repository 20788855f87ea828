#pragma once

#include "nonsep/covering.hpp"
#include "nonsep/cubes.hpp"
#include "nonsep/lattice.hpp"
#include "nonsep/separability.hpp"
#include "nonsep/stability.hpp"

#include <json.hpp>

#include <string>

namespace nonsep::io {

using json = nlohmann::json;

// Every *_from_json throws InputError on schema violations.

Vec vec_from_json(const json& j);
json to_json(const Vec& v);
Mat columns_from_json(const json& j);  ///< list of vectors, one per column

/// {"dim": d, "facets": [{"a": [...], "b": r}], "vertices": [[...]]}; either
/// list may be missing. {"shape": "cube"|"cross"|"simplex"|"polygon", ...}
/// is accepted as shorthand.
Polytope polytope_from_json(const json& j, const Tolerance& tol = {});
json to_json(const Polytope& p);

/// {"base": <polytope>, "members": [{"x": [...], "tau": r}]}
HomotheticFamily family_from_json(const json& j, const Tolerance& tol = {});
json to_json(const HomotheticFamily& f);

/// {"basis": [[...], ...]} with basis vectors listed one per entry.
Lattice lattice_from_json(const json& j);
json to_json(const Lattice& l);

/// Lattice JSON plus "body": <polytope>.
LatticeArrangement arrangement_from_json(const json& j, const Tolerance& tol = {});

/// {"d": 2, "offsets": [[...], ...]}
IntegerCubeFamily cubes_from_json(const json& j);
json to_json(const IntegerCubeFamily& f);

/// {"centers": [[...], ...], "radii": [...]}
BallFamily balls_from_json(const json& j);
json to_json(const BallFamily& f);

json to_json(const GapWitness& w);
json to_json(const Flat& f);
json to_json(const CoverResult& c);
json to_json(const Bracket& b);

Measure objective_from_string(const std::string& s);
const char* to_string(Measure m);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Fixed formatting for CSV cells, so equal runs give equal bytes.
std::string fmt(double x);

}  // namespace nonsep::io
