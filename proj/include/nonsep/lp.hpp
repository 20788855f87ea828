#pragma once

#include "nonsep/types.hpp"

#include <vector>

namespace nonsep {

enum class LpStatus { optimal, infeasible, unbounded };
enum class Relation { le, eq, ge };
enum class Sense { maximize, minimize };

const char* to_string(LpStatus s);

/// Dense linear program. Variables are free unless marked nonnegative.
class LinearProgram {
 public:
  explicit LinearProgram(int num_vars);

  int num_vars() const { return num_vars_; }
  int num_constraints() const { return static_cast<int>(rows_.size()); }

  void set_objective(const Vec& c, Sense sense = Sense::maximize);
  void add_constraint(const Vec& row, Relation rel, double rhs);
  void set_nonnegative(int var);
  void set_all_nonnegative();

  const Vec& objective() const { return objective_; }
  Sense sense() const { return sense_; }
  const Vec& row(int i) const { return rows_[static_cast<size_t>(i)]; }
  Relation relation(int i) const { return rels_[static_cast<size_t>(i)]; }
  double rhs(int i) const { return rhs_[static_cast<size_t>(i)]; }
  bool nonnegative(int var) const { return nonneg_[static_cast<size_t>(var)]; }

 private:
  int num_vars_;
  Vec objective_;
  Sense sense_ = Sense::maximize;
  std::vector<Vec> rows_;
  std::vector<Relation> rels_;
  std::vector<double> rhs_;
  std::vector<bool> nonneg_;
};

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  double value = 0.0;       ///< objective value in the caller's sense
  Vec x;                    ///< optimal point (empty unless optimal)
  double max_violation = 0; ///< largest constraint residual at x
  int iterations = 0;
};

/// Two-phase dense tableau simplex. Dantzig pricing, falling back to Bland's
/// rule after a run of degenerate pivots.
LpResult solve_lp(const LinearProgram& lp, const Tolerance& tol = {});

}  // namespace nonsep
