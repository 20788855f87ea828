#include "nonsep/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nonsep {

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "unknown";
}

LinearProgram::LinearProgram(int num_vars)
    : num_vars_(num_vars), objective_(Vec::Zero(num_vars)),
      nonneg_(static_cast<size_t>(num_vars), false) {
  if (num_vars <= 0) throw InputError("linear program needs at least one variable");
}

void LinearProgram::set_objective(const Vec& c, Sense sense) {
  require_dim(c, num_vars_, "lp objective");
  if (!c.allFinite()) throw InputError("lp objective has non-finite entries");
  objective_ = c;
  sense_ = sense;
}

void LinearProgram::add_constraint(const Vec& row, Relation rel, double rhs) {
  require_dim(row, num_vars_, "lp constraint");
  if (!row.allFinite() || !std::isfinite(rhs)) {
    throw InputError("lp constraint has non-finite entries");
  }
  rows_.push_back(row);
  rels_.push_back(rel);
  rhs_.push_back(rhs);
}

void LinearProgram::set_nonnegative(int var) {
  if (var < 0 || var >= num_vars_) throw InputError("lp variable index out of range");
  nonneg_[static_cast<size_t>(var)] = true;
}

void LinearProgram::set_all_nonnegative() { std::fill(nonneg_.begin(), nonneg_.end(), true); }

namespace {

constexpr double kPivotTol = 1e-11;

// Pivots are row operations.
using TabMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Tableau in the usual layout: rows 0..m-1 are constraints, row m is the
// reduced-cost row of a maximization, last column holds the right-hand side.
class Tableau {
 public:
  Tableau(TabMat t, std::vector<int> basis, std::vector<bool> allowed)
      : t_(std::move(t)), basis_(std::move(basis)), allowed_(std::move(allowed)) {}

  TabMat& data() { return t_; }
  std::vector<int>& basis() { return basis_; }
  std::vector<bool>& allowed() { return allowed_; }
  int rows() const { return static_cast<int>(t_.rows()) - 1; }
  int cols() const { return static_cast<int>(t_.cols()) - 1; }
  double value() const { return t_(rows(), cols()); }

  void pivot(int r, int c) {
    const double p = t_(r, c);
    t_.row(r) /= p;
    for (int i = 0; i <= rows(); ++i) {
      if (i == r) continue;
      const double f = t_(i, c);
      if (f != 0.0) t_.row(i) -= f * t_.row(r);
    }
    basis_[static_cast<size_t>(r)] = c;
  }

  // Returns false if unbounded.
  bool optimize(double cost_tol, int& iterations, int max_iterations) {
    int degenerate_run = 0;
    const int m = rows();
    const int n = cols();
    while (true) {
      if (iterations >= max_iterations) {
        throw ComputeError("simplex iteration limit reached");
      }
      const bool bland = degenerate_run > 50;
      int enter = -1;
      double best = -cost_tol;
      for (int j = 0; j < n; ++j) {
        if (!allowed_[static_cast<size_t>(j)]) continue;
        const double rc = t_(m, j);
        if (bland) {
          if (rc < -cost_tol) { enter = j; break; }
        } else if (rc < best) {
          best = rc;
          enter = j;
        }
      }
      if (enter < 0) return true;

      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i) {
        const double a = t_(i, enter);
        if (a <= kPivotTol) continue;
        const double ratio = std::max(t_(i, n), 0.0) / a;
        if (ratio < best_ratio - 1e-14 ||
            (ratio <= best_ratio + 1e-14 && leave >= 0 &&
             basis_[static_cast<size_t>(i)] < basis_[static_cast<size_t>(leave)])) {
          best_ratio = std::min(best_ratio, ratio);
          leave = i;
        }
      }
      if (leave < 0) return false;
      degenerate_run = best_ratio <= 1e-14 ? degenerate_run + 1 : 0;
      pivot(leave, enter);
      ++iterations;
    }
  }

 private:
  TabMat t_;
  std::vector<int> basis_;
  std::vector<bool> allowed_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp, const Tolerance& tol) {
  const int nv = lp.num_vars();
  const int m = lp.num_constraints();

  // Column layout: structural (free vars split in two), slack/surplus, artificial.
  std::vector<int> pos_col(static_cast<size_t>(nv)), neg_col(static_cast<size_t>(nv), -1);
  int ncols = 0;
  for (int j = 0; j < nv; ++j) {
    pos_col[static_cast<size_t>(j)] = ncols++;
    if (!lp.nonnegative(j)) neg_col[static_cast<size_t>(j)] = ncols++;
  }
  const int n_struct = ncols;

  std::vector<double> sign(static_cast<size_t>(m), 1.0);
  std::vector<Relation> rel(static_cast<size_t>(m));
  int n_slack = 0;
  int n_art = 0;
  for (int i = 0; i < m; ++i) {
    Relation r = lp.relation(i);
    if (lp.rhs(i) < 0.0) {
      sign[static_cast<size_t>(i)] = -1.0;
      if (r == Relation::le) r = Relation::ge;
      else if (r == Relation::ge) r = Relation::le;
    }
    rel[static_cast<size_t>(i)] = r;
    if (r != Relation::eq) ++n_slack;
    if (r != Relation::le) ++n_art;
  }
  const int slack0 = n_struct;
  const int art0 = slack0 + n_slack;
  ncols = art0 + n_art;

  TabMat t = TabMat::Zero(m + 1, ncols + 1);
  std::vector<int> basis(static_cast<size_t>(m));
  int next_slack = slack0;
  int next_art = art0;
  double rhs_scale = 1.0;
  for (int i = 0; i < m; ++i) {
    const double s = sign[static_cast<size_t>(i)];
    const Vec& a = lp.row(i);
    for (int j = 0; j < nv; ++j) {
      t(i, pos_col[static_cast<size_t>(j)]) = s * a(j);
      if (neg_col[static_cast<size_t>(j)] >= 0) t(i, neg_col[static_cast<size_t>(j)]) = -s * a(j);
    }
    t(i, ncols) = s * lp.rhs(i);
    rhs_scale = std::max(rhs_scale, std::abs(lp.rhs(i)));
    switch (rel[static_cast<size_t>(i)]) {
      case Relation::le:
        t(i, next_slack) = 1.0;
        basis[static_cast<size_t>(i)] = next_slack++;
        break;
      case Relation::ge:
        t(i, next_slack++) = -1.0;
        t(i, next_art) = 1.0;
        basis[static_cast<size_t>(i)] = next_art++;
        break;
      case Relation::eq:
        t(i, next_art) = 1.0;
        basis[static_cast<size_t>(i)] = next_art++;
        break;
    }
  }

  std::vector<bool> allowed(static_cast<size_t>(ncols), true);
  Tableau tab(std::move(t), std::move(basis), std::move(allowed));
  LpResult result;
  const int max_iter = 200 * (m + ncols) + 1000;
  const double cost_tol = 1e-10;

  if (n_art > 0) {
    // Phase I: maximize -sum(artificials).
    TabMat& T = tab.data();
    for (int j = art0; j < ncols; ++j) T(m, j) = 1.0;
    for (int i = 0; i < m; ++i) {
      if (tab.basis()[static_cast<size_t>(i)] >= art0) T.row(m) -= T.row(i);
    }
    tab.optimize(cost_tol, result.iterations, max_iter);
    if (-tab.value() > tol.lp * rhs_scale) {
      result.status = LpStatus::infeasible;
      return result;
    }
    // Drive remaining artificials out of the basis; drop redundant rows.
    std::vector<int> keep;
    for (int i = 0; i < m; ++i) {
      if (tab.basis()[static_cast<size_t>(i)] < art0) {
        keep.push_back(i);
        continue;
      }
      int col = -1;
      double best = kPivotTol * 100;
      for (int j = 0; j < art0; ++j) {
        if (std::abs(T(i, j)) > best) { best = std::abs(T(i, j)); col = j; }
      }
      if (col >= 0) {
        tab.pivot(i, col);
        keep.push_back(i);
      }
    }
    if (static_cast<int>(keep.size()) < m) {
      TabMat reduced(static_cast<Eigen::Index>(keep.size()) + 1, T.cols());
      std::vector<int> rb;
      for (size_t k = 0; k < keep.size(); ++k) {
        reduced.row(static_cast<Eigen::Index>(k)) = T.row(keep[k]);
        rb.push_back(tab.basis()[static_cast<size_t>(keep[k])]);
      }
      reduced.row(reduced.rows() - 1) = T.row(m);
      tab = Tableau(std::move(reduced), std::move(rb), tab.allowed());
    }
    for (int j = art0; j < ncols; ++j) tab.allowed()[static_cast<size_t>(j)] = false;
  }

  // Phase II.
  TabMat& T = tab.data();
  const int mr = tab.rows();
  const double dir = lp.sense() == Sense::maximize ? 1.0 : -1.0;
  T.row(mr).setZero();
  for (int j = 0; j < nv; ++j) {
    const double c = dir * lp.objective()(j);
    T(mr, pos_col[static_cast<size_t>(j)]) = -c;
    if (neg_col[static_cast<size_t>(j)] >= 0) T(mr, neg_col[static_cast<size_t>(j)]) = c;
  }
  for (int i = 0; i < mr; ++i) {
    const double f = T(mr, tab.basis()[static_cast<size_t>(i)]);
    if (f != 0.0) T.row(mr) -= f * T.row(i);
  }
  if (!tab.optimize(cost_tol, result.iterations, max_iter)) {
    result.status = LpStatus::unbounded;
    return result;
  }

  Vec z = Vec::Zero(ncols);
  for (int i = 0; i < mr; ++i) z(tab.basis()[static_cast<size_t>(i)]) = T(i, tab.cols());
  result.x = Vec::Zero(nv);
  for (int j = 0; j < nv; ++j) {
    double v = z(pos_col[static_cast<size_t>(j)]);
    if (neg_col[static_cast<size_t>(j)] >= 0) v -= z(neg_col[static_cast<size_t>(j)]);
    result.x(j) = v;
  }
  result.status = LpStatus::optimal;
  result.value = lp.objective().dot(result.x);
  for (int i = 0; i < m; ++i) {
    const double lhs = lp.row(i).dot(result.x);
    double viol = 0.0;
    switch (lp.relation(i)) {
      case Relation::le: viol = lhs - lp.rhs(i); break;
      case Relation::ge: viol = lp.rhs(i) - lhs; break;
      case Relation::eq: viol = std::abs(lhs - lp.rhs(i)); break;
    }
    result.max_violation = std::max(result.max_violation, viol);
  }
  for (int j = 0; j < nv; ++j) {
    if (lp.nonnegative(j)) result.max_violation = std::max(result.max_violation, -result.x(j));
  }
  return result;
}

}  // namespace nonsep
