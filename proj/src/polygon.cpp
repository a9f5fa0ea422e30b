#include "cgx/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cgx {

int orientation(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c) {
  const Rational cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  return sgn(cross);
}

Polygon Polygon::hull_of(std::vector<RationalPoint> points) {
  if (points.empty()) throw InvalidInput("polygon needs at least one vertex");
  for (const auto& p : points) {
    if (p.dimension() != 2) throw InvalidInput("polygon vertices must be planar");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() == 1) return Polygon(Trusted{}, std::move(points));

  // Andrew's monotone chain; collinear points are dropped.
  std::vector<RationalPoint> hull;
  hull.reserve(2 * points.size());
  for (const auto& p : points) {
    while (hull.size() >= 2 && orientation(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  const std::size_t lower = hull.size() + 1;
  for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
    while (hull.size() >= lower && orientation(hull[hull.size() - 2], hull.back(), *it) <= 0) hull.pop_back();
    hull.push_back(*it);
  }
  hull.pop_back();
  return Polygon(Trusted{}, std::move(hull));
}

Polygon::Polygon(std::vector<RationalPoint> vertices) {
  Polygon canonical = hull_of(vertices);
  const auto& hull = canonical.vertices_;
  if (hull.size() != vertices.size()) {
    throw InvalidInput("polygon vertices are repeated or not in convex position");
  }
  const auto start = std::find(vertices.begin(), vertices.end(), hull.front());
  std::rotate(vertices.begin(), start, vertices.end());
  if (vertices != hull) throw InvalidInput("polygon vertices are not in counterclockwise order");
  vertices_ = std::move(canonical.vertices_);
}

PolygonMap::PolygonMap(GroundSet ground, std::vector<Polygon> shapes)
    : ground_(std::move(ground)), shapes_(std::move(shapes)) {
  if (shapes_.size() != ground_.size()) throw InvalidInput("polygon map needs exactly one polygon per element");
}

bool polygon_covered(const Polygon& inner, const std::vector<RationalPoint>& outer_vertices) {
  return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                     [&](const RationalPoint& v) { return in_hull(v, outer_vertices).inside; });
}

namespace {

std::vector<RationalPoint> union_vertices(const PolygonMap& m, Subset x) {
  std::vector<RationalPoint> pts;
  x.for_each([&](ElementId e) {
    const auto& v = m.shape(e).vertices();
    pts.insert(pts.end(), v.begin(), v.end());
  });
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

ConvexGeometry geometry_from_polygons(const PolygonMap& m) {
  const std::size_t n = m.ground().size();
  require_within_limit(n, kMaxEnumerable, "polygon geometry");
  std::vector<Subset> members{Subset{}};
  const Subset full = m.ground().full();
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const Subset x(bits);
    const auto hull = union_vertices(m, x);
    bool convex = true;
    (full - x).for_each([&](ElementId y) { convex = convex && !polygon_covered(m.shape(y), hull); });
    if (convex) members.push_back(x);
  }
  return ConvexGeometry(m.ground(), std::move(members));
}

StrongInjectivityReport check_strong_injectivity(const PolygonMap& m) {
  const std::size_t n = m.ground().size();
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a + 1; b < n; ++b) {
      for (const auto& v : m.shape(a).vertices()) {
        const auto& other = m.shape(b).vertices();
        if (std::find(other.begin(), other.end(), v) != other.end()) {
          return StrongInjectivityReport{false, std::make_pair(a, b), v};
        }
      }
    }
  }
  return {};
}

VerificationReport verify_polygons(const PolygonMap& m, const ConvexGeometry& g) {
  const ConvexGeometry realized = relabel(geometry_from_polygons(m), g.ground());
  if (auto diff = first_difference(realized, g)) {
    const bool in_polygons = realized.contains(*diff);
    return VerificationReport::failure(
        *diff, g.ground().format(*diff) + (in_polygons ? " is convex for the polygons but not in the target"
                                                       : " is convex in the target but not for the polygons"));
  }
  return VerificationReport::ok();
}

VerificationReport verify_origin_in_hulls(const PolygonMap& m) {
  const std::size_t n = m.ground().size();
  require_within_limit(n, kMaxEnumerable, "origin containment sweep");
  const RationalPoint origin{Rational(0), Rational(0)};
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const Subset x(bits);
    if (!in_hull(origin, union_vertices(m, x)).inside) {
      return VerificationReport::failure(x, "origin is outside Hull(F(" + m.ground().format(x) + "))");
    }
  }
  return VerificationReport::ok();
}

double polygon_radius_bound(std::size_t n, std::size_t elements) {
  const double c = std::abs(std::cos(2.0 * std::numbers::pi / static_cast<double>(n)));
  return 2.0 * static_cast<double>(elements) * c / (1.0 - c);
}

std::int64_t polygon_offset(std::size_t n, std::size_t elements) {
  const double bound = polygon_radius_bound(n, elements);
  const double nearest = std::round(bound);
  // Snap values that are integral up to rounding noise (e.g. n = 3 gives exactly 2|E|).
  const double ceiling = std::abs(bound - nearest) < 1e-9 ? nearest : std::ceil(bound);
  return static_cast<std::int64_t>(ceiling) + 1;
}

RationalPoint rational_direction(std::size_t i, std::size_t n, std::int64_t denominator) {
  const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(i) /
                            static_cast<long double>(n);
  auto snap = [&](long double value) {
    const auto num = static_cast<long>(std::llround(value * static_cast<long double>(denominator)));
    Rational q(mpz_class(num), mpz_class(static_cast<long>(denominator)));
    q.canonicalize();
    return q;
  };
  return RationalPoint{snap(std::cos(angle)), snap(std::sin(angle))};
}

namespace {

Polygon segment(const Rational& left, const Rational& right) {
  return Polygon::hull_of({RationalPoint{left, Rational(0)}, RationalPoint{right, Rational(0)}});
}

}  // namespace

PolygonMap polygons_for_orderings(const OrderingFamily& f, std::int64_t denominator) {
  const std::size_t n = f.m();
  const std::size_t size = f.n();
  std::vector<Polygon> shapes;
  shapes.reserve(size);

  if (n == 1) {
    // Rank j maps to [-(j-1), j]: each interval strictly contains the previous one.
    const auto& o = f.orders().front();
    for (ElementId x = 0; x < size; ++x) {
      const long j = static_cast<long>(o.rank(x));
      shapes.push_back(segment(Rational(-(j - 1)), Rational(j)));
    }
  } else if (n == 2) {
    // Left endpoint encodes the first rank, right endpoint the second.
    const auto& first = f.orders()[0];
    const auto& second = f.orders()[1];
    for (ElementId x = 0; x < size; ++x) {
      shapes.push_back(segment(Rational(-static_cast<long>(first.rank(x))), Rational(static_cast<long>(second.rank(x)))));
    }
  } else {
    const std::int64_t offset = polygon_offset(n, size);
    std::vector<RationalPoint> rays;
    for (std::size_t i = 1; i <= n; ++i) rays.push_back(rational_direction(i, n, denominator));
    for (ElementId x = 0; x < size; ++x) {
      std::vector<RationalPoint> vertices;
      for (std::size_t i = 0; i < n; ++i) {
        const Rational radius(static_cast<long>(offset + static_cast<std::int64_t>(f.orders()[i].rank(x))));
        vertices.push_back(RationalPoint{Rational(radius * rays[i][0]), Rational(radius * rays[i][1])});
      }
      shapes.push_back(Polygon::hull_of(std::move(vertices)));
    }
  }
  return PolygonMap(f.ground(), std::move(shapes));
}

PolygonEmbedding embed_polygons(const ConvexGeometry& g, std::size_t limit) {
  CdimResult dim = cdim(g, limit);
  const std::size_t n = dim.k;
  if (n <= 2) {
    PolygonMap map = polygons_for_orderings(dim.witness);
    const auto report = verify_polygons(map, g);
    if (!report.pass) throw VerificationFailure("interval embedding failed verification: " + report.detail);
    return PolygonEmbedding{std::move(map), n, std::move(dim.witness), 0, std::nullopt, 1};
  }

  std::int64_t denominator = 1000000;
  std::string last_failure;
  for (std::size_t attempt = 1; attempt <= kPolygonRetryBudget; ++attempt, denominator *= 1000) {
    PolygonMap map = polygons_for_orderings(dim.witness, denominator);
    const auto report = verify_polygons(map, g);
    if (report.pass) {
      return PolygonEmbedding{std::move(map), n, std::move(dim.witness), polygon_offset(n, g.n()), denominator,
                              attempt};
    }
    last_failure = report.detail;
  }
  throw VerificationFailure("polygon embedding failed after " + std::to_string(kPolygonRetryBudget) +
                            " refinements: " + last_failure);
}

}  // namespace cgx
