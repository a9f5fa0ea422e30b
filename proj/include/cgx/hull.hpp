#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cgx/geometry.hpp"
#include "cgx/rational.hpp"

namespace cgx {

/// Certificate that x lies outside Hull(S): normal . s <= threshold < normal . x for all s.
struct Separator {
  RationalPoint normal;
  Rational threshold;
};

struct HullMembership {
  bool inside = false;
  /// Convex weights over S reproducing x (when inside).
  std::vector<Rational> weights;
  /// Strictly separating functional (when outside).
  std::optional<Separator> separator;

  explicit operator bool() const { return inside; }
};

/// Exact convex hull membership of x in Hull(S), with a certificate either way.
/// Throws InvalidInput on an empty S or mismatched dimensions.
HullMembership in_hull(const RationalPoint& x, std::span<const RationalPoint> s);

/// Points indexed by ElementId.
using PointMap = std::vector<RationalPoint>;

/// Elements x with F(x)_i >= min_{p in P} F(p)_i for every coordinate i.
/// Throws InvalidInput on P empty.
Subset pos_hull_members(Subset p, const PointMap& f);

/// Elements x for which F(x) dominates, coordinatewise, some point of Hull(F(P)).
/// Decided exactly by LP. Throws InvalidInput on P empty.
Subset ext_hull_members(Subset p, const PointMap& f);

/// Whether F(x) dominates some convex combination of F(P).
bool dominates_hull_point(const RationalPoint& x, Subset p, const PointMap& f);

/// The pair (G, Q) of a generalized convex shelling, with G given per ground element.
class ShellingInstance {
 public:
  /// Validates dimensions, injectivity of G, Q nonempty, and G disjoint from Hull(Q).
  ShellingInstance(GroundSet ground, PointMap points, std::vector<RationalPoint> q);

  const GroundSet& ground() const { return ground_; }
  const PointMap& points() const { return points_; }
  const RationalPoint& point(ElementId e) const { return points_[e]; }
  const std::vector<RationalPoint>& q() const { return q_; }
  std::size_t dimension() const { return dimension_; }

  /// {y : G(y) in Hull(G(X) + Q)} as a subset of E.
  Subset hull_trace(Subset x) const;

 private:
  GroundSet ground_;
  PointMap points_;
  std::vector<RationalPoint> q_;
  std::size_t dimension_ = 0;
};

/// The family {X : Hull(G(X) + Q) meets G exactly in G(X)}, over all 2^N subsets.
ConvexGeometry shelling_geometry(const ShellingInstance& inst);

}  // namespace cgx
