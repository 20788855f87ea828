#pragma once

#include "nonsep/polytope.hpp"

#include <vector>

namespace nonsep {

struct Member {
  Vec x;
  double tau = 1.0;
};

/// Homothets x_i + tau_i * base of a single base polytope.
class HomotheticFamily {
 public:
  /// Throws InputError for fewer than two members, nonpositive ratios or
  /// dimension mismatches.
  HomotheticFamily(Polytope base, std::vector<Member> members);

  const Polytope& base() const { return base_; }
  const std::vector<Member>& members() const { return members_; }
  const Member& member(int i) const;
  int size() const { return static_cast<int>(members_.size()); }
  int dim() const { return base_.dim(); }

  /// T = sum of the ratios.
  double total_ratio() const;

  /// sum tau_i x_i / T.
  Vec weighted_center() const;

  Polytope member_polytope(int i) const;
  std::vector<Vec> member_vertices(int i) const;
  std::vector<Vec> all_vertices() const;

  /// Hull of the union of all members.
  Polytope hull() const;

  /// Same union, with the base shifted so that `c` becomes its origin.
  HomotheticFamily recentred(const Vec& c) const;

  HomotheticFamily translated(const Vec& t) const;
  HomotheticFamily scaled(double s) const;

 private:
  Polytope base_;
  std::vector<Member> members_;
};

}  // namespace nonsep
