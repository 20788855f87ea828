#include "nonsep/io.hpp"

#include "nonsep/shapes.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace nonsep::io {
namespace {

const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string(what) + ": missing \"" + key + "\"");
  return j.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + ": expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw InputError(std::string(what) + ": not finite");
  return x;
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  } catch (const ComputeError& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Vec vec_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InputError("vector: expected a non-empty array");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = number(j[i], "vector entry");
  return v;
}

json to_json(const Vec& v) { return to_std(v); }

Mat columns_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InputError("basis: expected a non-empty list of vectors");
  const Vec first = vec_from_json(j[0]);
  Mat m(first.size(), static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) {
    const Vec c = vec_from_json(j[i]);
    require_dim(c, first.size(), "basis vector");
    m.col(static_cast<Eigen::Index>(i)) = c;
  }
  return m;
}

Polytope polytope_from_json(const json& j, const Tolerance& tol) {
  return guarded("polytope", [&] {
    if (!j.is_object()) throw InputError("polytope: expected an object");
    if (j.contains("shape")) {
      const auto shape = j.at("shape").get<std::string>();
      const int d = j.value("d", 2);
      if (d < 1 || d > 8) throw InputError("polytope: d must lie in 1..8");
      if (shape == "cube") return shapes::cube(d, j.value("half", 0.5), tol);
      if (shape == "cross") return shapes::cross_polytope(d, j.value("r", 1.0), tol);
      if (shape == "simplex") return shapes::standard_simplex(d, tol);
      if (shape == "polygon") {
        return shapes::regular_polygon(j.value("k", 6), j.value("r", 1.0), j.value("phase", 0.0), tol);
      }
      throw InputError("polytope: unknown shape \"" + shape + "\"");
    }
    std::optional<int> dim;
    if (j.contains("dim")) dim = j.at("dim").get<int>();
    Polytope p = [&] {
      if (j.contains("vertices")) {
        std::vector<Vec> pts;
        for (const auto& v : j.at("vertices")) pts.push_back(vec_from_json(v));
        if (pts.empty()) throw InputError("polytope: empty vertex list");
        for (const auto& v : pts) require_dim(v, pts[0].size(), "polytope vertex");
        return Polytope::from_vertices(pts, tol);
      }
      if (j.contains("facets")) {
        std::vector<Halfspace> hs;
        for (const auto& h : j.at("facets")) hs.push_back({vec_from_json(field(h, "a", "facet")), number(field(h, "b", "facet"), "facet offset")});
        if (hs.empty()) throw InputError("polytope: empty facet list");
        for (const auto& h : hs) require_dim(h.a, hs[0].a.size(), "polytope facet");
        return Polytope::from_facets(hs, tol);
      }
      throw InputError("polytope: needs \"vertices\", \"facets\" or \"shape\"");
    }();
    if (dim && *dim != p.dim()) throw InputError("polytope: \"dim\" disagrees with the data");
    return p;
  });
}

json to_json(const Polytope& p) {
  json facets = json::array();
  for (const auto& h : p.facets()) facets.push_back({{"a", to_json(h.a)}, {"b", h.b}});
  json verts = json::array();
  for (const auto& v : p.vertices()) verts.push_back(to_json(v));
  return {{"dim", p.dim()}, {"facets", facets}, {"vertices", verts}};
}

HomotheticFamily family_from_json(const json& j, const Tolerance& tol) {
  return guarded("family", [&] {
    Polytope base = polytope_from_json(field(j, "base", "family"), tol);
    std::vector<Member> ms;
    for (const auto& m : field(j, "members", "family")) {
      ms.push_back({vec_from_json(field(m, "x", "member")), m.contains("tau") ? number(m.at("tau"), "tau") : 1.0});
    }
    return HomotheticFamily(std::move(base), std::move(ms));
  });
}

json to_json(const HomotheticFamily& f) {
  json ms = json::array();
  for (const auto& m : f.members()) ms.push_back({{"x", to_json(m.x)}, {"tau", m.tau}});
  return {{"base", to_json(f.base())}, {"members", ms}};
}

Lattice lattice_from_json(const json& j) {
  return guarded("lattice", [&] {
    const Mat b = columns_from_json(field(j, "basis", "lattice"));
    if (b.rows() != b.cols()) throw InputError("lattice: basis must be square");
    return Lattice(b);
  });
}

json to_json(const Lattice& l) {
  json b = json::array();
  for (Eigen::Index c = 0; c < l.basis().cols(); ++c) b.push_back(to_json(Vec(l.basis().col(c))));
  return {{"basis", b}};
}

LatticeArrangement arrangement_from_json(const json& j, const Tolerance& tol) {
  auto body = polytope_from_json(field(j, "body", "arrangement"), tol);
  auto lat = lattice_from_json(j);
  if (body.dim() != lat.dim()) throw InputError("arrangement: body and lattice dimensions differ");
  return {std::move(body), std::move(lat)};
}

IntegerCubeFamily cubes_from_json(const json& j) {
  return guarded("cubes", [&] {
    IntegerCubeFamily f;
    f.d = field(j, "d", "cubes").get<int>();
    for (const auto& o : field(j, "offsets", "cubes")) {
      Cell c;
      for (const auto& x : o) {
        if (!x.is_number_integer()) throw InputError("cubes: offsets must be integers");
        c.push_back(x.get<std::int64_t>());
      }
      f.offsets.push_back(c);
    }
    f.validate();
    return f;
  });
}

json to_json(const IntegerCubeFamily& f) { return {{"d", f.d}, {"offsets", f.offsets}}; }

BallFamily balls_from_json(const json& j) {
  return guarded("balls", [&] {
    BallFamily f;
    for (const auto& c : field(j, "centers", "balls")) f.centers.push_back(vec_from_json(c));
    for (const auto& r : field(j, "radii", "balls")) f.radii.push_back(number(r, "radius"));
    f.validate();
    return f;
  });
}

json to_json(const BallFamily& f) {
  json cs = json::array();
  for (const auto& c : f.centers) cs.push_back(to_json(c));
  return {{"centers", cs}, {"radii", f.radii}};
}

json to_json(const GapWitness& w) { return {{"direction", to_json(w.direction)}, {"gap", w.gap}, {"offset", w.offset}}; }

json to_json(const Flat& f) {
  json basis = json::array();
  for (Eigen::Index c = 0; c < f.basis.cols(); ++c) basis.push_back(to_json(Vec(f.basis.col(c))));
  return {{"flat", {{"point", to_json(f.point)}, {"basis", basis}}}};
}

json to_json(const CoverResult& c) { return {{"t", to_json(c.t)}, {"lambda", c.lambda}, {"certified", c.certified}}; }

json to_json(const Bracket& b) {
  json j = {{"lower", b.lower}, {"upper", b.upper}, {"width", b.width()}};
  if (b.witness.size() > 0) j["witness"] = to_json(b.witness);
  return j;
}

Measure objective_from_string(const std::string& s) {
  if (s == "area") return Measure::area;
  if (s == "perimeter") return Measure::perimeter;
  if (s == "volume") return Measure::volume;
  throw InputError("unknown objective \"" + s + "\"");
}

const char* to_string(Measure m) {
  switch (m) {
    case Measure::area: return "area";
    case Measure::perimeter: return "perimeter";
    case Measure::volume: return "volume";
  }
  return "?";
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace nonsep::io
