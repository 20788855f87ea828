#pragma once

#include "nonsep/family.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace nonsep {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Projection of member i onto the line spanned by u.
Interval project_member(const HomotheticFamily& f, int i, const Vec& u);

/// Gap between projected members: the hyperplane {<direction, x> = offset}
/// strictly separates the members on either side.
struct GapWitness {
  Vec direction;
  double gap = 0.0;
  double offset = 0.0;
};

struct WnsResult {
  bool wns = true;
  std::optional<GapWitness> witness;
};

/// Facet normals of `p`, one per opposite pair, sign-normalised so the first
/// nonzero coordinate is positive.
std::vector<Vec> canonical_normals(const Polytope& p);

/// Weak non-separability: along every facet normal of the base the projected
/// members form one interval (touching counts as connected).
WnsResult is_wns(const HomotheticFamily& f);

struct NsResult {
  bool ns = true;
  std::vector<int> part;  ///< one side of a strictly separable split, when found
};

inline constexpr int kMaxNsMembers = 20;

/// Non-separability by scanning every bipartition (member 0 fixed on one side)
/// and testing the two vertex hulls for a common point. Parallel over splits.
NsResult is_ns(const HomotheticFamily& f);

/// Affine flat point + span(basis columns).
struct Flat {
  Vec point;
  Mat basis;
};

struct KwipResult {
  bool falsified = false;
  std::optional<Flat> witness;
  std::int64_t samples_used = 0;
};

/// Monte-Carlo search for a k-flat parallel to a facet of the base that meets
/// the hull of the family but misses every member. k = d-1 is decided exactly.
/// The direction space is Haar-distributed inside the hyperplane of a
/// uniformly chosen facet; the flat passes through a uniform point of the
/// hull. Deterministic in `seed` regardless of thread count.
KwipResult is_kwip_sampled(const HomotheticFamily& f, int k, std::int64_t samples, std::uint64_t seed = 1);

/// True iff the flat misses the polytope by more than the incidence tolerance.
bool flat_misses(const Flat& flat, const Polytope& p);

struct EdgeCoverResult {
  bool covered = true;
  std::optional<Vec> uncovered_point;
};

/// Checks that every edge of the hull of the family lies in the union.
EdgeCoverResult edges_covered(const HomotheticFamily& f);

namespace serial {
NsResult is_ns(const HomotheticFamily& f);
KwipResult is_kwip_sampled(const HomotheticFamily& f, int k, std::int64_t samples, std::uint64_t seed = 1);
}  // namespace serial

}  // namespace nonsep
