#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "cgx/geometry.hpp"
#include "cgx/hull.hpp"
#include "cgx/orderings.hpp"

namespace cgx {

/// A finite partial order, kept as its cover relation plus reachability sets.
class Poset {
 public:
  /// The order generated by `relations` (pairs lower <= upper) under reflexivity and
  /// transitivity. Throws InvalidInput when the pairs force a cycle.
  Poset(GroundSet ground, const std::vector<std::pair<ElementId, ElementId>>& relations);

  const GroundSet& ground() const { return ground_; }
  bool leq(ElementId a, ElementId b) const { return up_[a].contains(b); }
  /// {x : a <= x}.
  Subset up(ElementId a) const { return up_[a]; }
  /// {x : x <= b}.
  Subset down(ElementId b) const { return down_[b]; }
  /// Pairs (a, b) with a < b and nothing strictly between.
  const std::vector<std::pair<ElementId, ElementId>>& covers() const { return covers_; }

 private:
  GroundSet ground_;
  std::vector<Subset> up_;
  std::vector<Subset> down_;
  std::vector<std::pair<ElementId, ElementId>> covers_;
};

/// Order-convex subsets: X equal to {x : a <= x <= b for some a, b in X}.
ConvexGeometry poset_geometry(const Poset& p);

/// A < B < C with every element of a lower level below every element of the next.
/// Elements are named a1.., b1.., c1... Throws InvalidInput on a zero size.
Poset three_level_poset(std::size_t a, std::size_t b, std::size_t c);

/// X convex iff Hull(X) contains no other point. Throws InvalidInput on repeated points.
ConvexGeometry planar_points_geometry(const GroundSet& ground, const PointMap& points);

/// n collinear points (0,0), (1,0), ..., (n-1,0).
PointMap line_points(std::size_t n);

/// n distinct rational points lying exactly on the unit circle, near angles 2 pi k / n.
PointMap circle_points(std::size_t n);

/// m uniformly random orderings of a ground set named a, b, c, ...
OrderingFamily random_ordering_family(std::size_t n, std::size_t m, std::mt19937_64& rng);

struct DRelation {
  /// Pairs (a, b) with a D b, sorted.
  std::vector<std::pair<ElementId, ElementId>> pairs;
  bool acyclic = true;
  /// A directed cycle a0 D a1 D ... D a0 when one exists (first vertex not repeated).
  std::optional<std::vector<ElementId>> cycle;

  bool contains(ElementId a, ElementId b) const;
};

/// a D b iff some A containing a, but not b, has b in cl(A) and not in cl(A - a).
/// Throws LimitExceeded when |E| > limit.
DRelation d_relation(const ConvexGeometry& g, std::size_t limit = kDefaultLimit);

}  // namespace cgx
