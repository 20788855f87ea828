#pragma once

#include "nonsep/polytope.hpp"

namespace nonsep::shapes {

/// Axis-parallel box [lo, hi].
Polytope box(const Vec& lo, const Vec& hi, const Tolerance& tol = {});

/// [-half, half]^d.
Polytope cube(int d, double half = 0.5, const Tolerance& tol = {});

/// conv{+-r e_i}.
Polytope cross_polytope(int d, double r = 1.0, const Tolerance& tol = {});

/// conv{0, e_1, ..., e_d}.
Polytope standard_simplex(int d, const Tolerance& tol = {});

/// Regular k-gon with the given circumradius, first vertex at angle `phase`.
Polytope regular_polygon(int k, double circumradius = 1.0, double phase = 0.0, const Tolerance& tol = {});

}  // namespace nonsep::shapes
