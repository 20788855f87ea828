#include "nonsep/family.hpp"

#include <cmath>
#include <string>

namespace nonsep {

HomotheticFamily::HomotheticFamily(Polytope base, std::vector<Member> members)
    : base_(std::move(base)), members_(std::move(members)) {
  if (members_.size() < 2) throw InputError("family needs at least two members");
  for (const auto& m : members_) {
    require_dim(m.x, base_.dim(), "member translation");
    if (!(m.tau > 0.0) || !std::isfinite(m.tau)) throw InputError("member ratio must be positive");
    if (!m.x.allFinite()) throw InputError("member translation must be finite");
  }
}

const Member& HomotheticFamily::member(int i) const {
  if (i < 0 || i >= size()) throw InputError("member index " + std::to_string(i) + " out of range");
  return members_[static_cast<size_t>(i)];
}

double HomotheticFamily::total_ratio() const {
  double t = 0.0;
  for (const auto& m : members_) t += m.tau;
  return t;
}

Vec HomotheticFamily::weighted_center() const {
  Vec c = Vec::Zero(dim());
  for (const auto& m : members_) c += m.tau * m.x;
  return c / total_ratio();
}

Polytope HomotheticFamily::member_polytope(int i) const {
  const auto& m = member(i);
  return base_.scaled(m.tau).translated(m.x);
}

std::vector<Vec> HomotheticFamily::member_vertices(int i) const {
  const auto& m = member(i);
  std::vector<Vec> out;
  for (const auto& v : base_.vertices()) out.push_back(m.x + m.tau * v);
  return out;
}

std::vector<Vec> HomotheticFamily::all_vertices() const {
  std::vector<Vec> out;
  for (int i = 0; i < size(); ++i) {
    auto v = member_vertices(i);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

Polytope HomotheticFamily::hull() const { return Polytope::from_vertices(all_vertices(), base_.tol()); }

HomotheticFamily HomotheticFamily::recentred(const Vec& c) const {
  auto ms = members_;
  for (auto& m : ms) m.x += m.tau * c;
  return {base_.translated(-c), std::move(ms)};
}

HomotheticFamily HomotheticFamily::translated(const Vec& t) const {
  auto ms = members_;
  for (auto& m : ms) m.x += t;
  return {base_, std::move(ms)};
}

HomotheticFamily HomotheticFamily::scaled(double s) const {
  if (!(s > 0.0)) throw InputError("scale factor must be positive");
  auto ms = members_;
  for (auto& m : ms) {
    m.x *= s;
    m.tau *= s;
  }
  return {base_, std::move(ms)};
}

}  // namespace nonsep
