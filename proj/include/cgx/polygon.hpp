#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgx/geometry.hpp"
#include "cgx/hull.hpp"
#include "cgx/orderings.hpp"
#include "cgx/report.hpp"

namespace cgx {

/// Sign of the cross product (b - a) x (c - a): 1 for a left turn, -1 right, 0 collinear.
int orientation(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c);

/// A convex polygon in the plane, stored as its extreme points in counterclockwise order
/// starting from the lexicographically smallest. Points and segments are admitted.
class Polygon {
 public:
  /// Throws InvalidInput unless `vertices` are distinct planar points in convex position,
  /// counterclockwise, starting at the lexicographically smallest vertex.
  explicit Polygon(std::vector<RationalPoint> vertices);

  /// Convex hull of a nonempty set of planar points.
  static Polygon hull_of(std::vector<RationalPoint> points);

  const std::vector<RationalPoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  struct Trusted {};
  Polygon(Trusted, std::vector<RationalPoint> vertices) : vertices_(std::move(vertices)) {}

  std::vector<RationalPoint> vertices_;
};

/// One polygon per ground element.
class PolygonMap {
 public:
  PolygonMap(GroundSet ground, std::vector<Polygon> shapes);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Polygon>& shapes() const { return shapes_; }
  const Polygon& shape(ElementId e) const { return shapes_[e]; }

  friend bool operator==(const PolygonMap&, const PolygonMap&) = default;

 private:
  GroundSet ground_;
  std::vector<Polygon> shapes_;
};

/// Whether every vertex of `inner` lies in the hull of the union of `outer`'s vertices.
bool polygon_covered(const Polygon& inner, const std::vector<RationalPoint>& outer_vertices);

/// The family of X such that no polygon of an element outside X lies in Hull(F(X)).
ConvexGeometry geometry_from_polygons(const PolygonMap& m);

struct StrongInjectivityReport {
  bool pass = true;
  std::optional<std::pair<ElementId, ElementId>> elements;
  std::optional<RationalPoint> shared_vertex;
};

/// No two distinct elements' polygons share a vertex.
StrongInjectivityReport check_strong_injectivity(const PolygonMap& m);

/// geometry_from_polygons(m) equals g (matched by element name).
VerificationReport verify_polygons(const PolygonMap& m, const ConvexGeometry& g);

/// For every nonempty X, the origin lies in Hull(F(X)).
VerificationReport verify_origin_in_hulls(const PolygonMap& m);

/// 2|E| |cos(2 pi/n)| / (1 - |cos(2 pi/n)|) in floating point, for n >= 3.
double polygon_radius_bound(std::size_t n, std::size_t elements);

/// Ray offset used by the construction: ceiling of polygon_radius_bound plus one.
std::int64_t polygon_offset(std::size_t n, std::size_t elements);

/// cos and sin of 2 pi i / n rounded to rationals with the given denominator.
RationalPoint rational_direction(std::size_t i, std::size_t n, std::int64_t denominator);

struct PolygonEmbedding {
  PolygonMap map;
  /// Number of orderings used (the convex dimension).
  std::size_t rays = 0;
  OrderingFamily orders;
  /// Offset added to every rank along a ray (0 for the interval cases).
  std::int64_t offset = 0;
  /// Direction denominator of the accepted attempt (n >= 3 only).
  std::optional<std::int64_t> denominator;
  std::size_t attempts = 1;
};

inline constexpr std::size_t kPolygonRetryBudget = 4;

/// Embeds g as convex polygons in the plane and verifies the result exactly.
///
/// One ordering gives nested intervals, two give intervals whose endpoints encode the
/// two rank functions, and three or more place rank-scaled vertices on equally spaced
/// rays with rationalized directions, refining the denominator on a failed verification.
/// Throws VerificationFailure when the retry budget is exhausted.
PolygonEmbedding embed_polygons(const ConvexGeometry& g, std::size_t limit = kDefaultLimit);

/// The polygon map for a fixed family of orderings (no verification, no retries).
PolygonMap polygons_for_orderings(const OrderingFamily& f, std::int64_t denominator = 1000000);

}  // namespace cgx
