#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace nonsep {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Thresholds shared by every predicate in the library. Pass it down; never
/// hardcode a literal where one of these applies.
struct Tolerance {
  double geom = 1e-9;  ///< vertex/facet incidence, rank tests, containment
  double lp = 1e-8;    ///< primal feasibility of LP answers
  double gap = 1e-9;   ///< smallest projection gap treated as a real gap

  void validate() const {
    if (!(geom > 0.0) || !(lp > 0.0) || !(gap > 0.0)) {
      throw std::invalid_argument("tolerances must be strictly positive");
    }
  }
};

/// Malformed or out-of-contract input (dimension mismatch, bad parameters).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation that could not produce a valid answer (unbounded region,
/// degenerate polytope, solver failure).
class ComputeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_dim(const Vec& v, Eigen::Index d, const char* what) {
  if (v.size() != d) {
    throw InputError(std::string(what) + ": dimension mismatch (expected " +
                     std::to_string(d) + ", got " + std::to_string(v.size()) + ")");
  }
}

inline Vec to_vec(const std::vector<double>& xs) {
  return Eigen::Map<const Vec>(xs.data(), static_cast<Eigen::Index>(xs.size()));
}

inline std::vector<double> to_std(const Vec& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace nonsep
