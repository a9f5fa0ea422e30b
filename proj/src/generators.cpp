#include "cgx/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cgx {

Poset::Poset(GroundSet ground, const std::vector<std::pair<ElementId, ElementId>>& relations)
    : ground_(std::move(ground)) {
  const std::size_t n = ground_.size();
  up_.assign(n, Subset{});
  for (ElementId e = 0; e < n; ++e) up_[e] = Subset::singleton(e);
  for (auto [lo, hi] : relations) {
    if (lo >= n || hi >= n) throw InvalidInput("poset relation refers to an unknown element");
    up_[lo] = up_[lo].with(hi);
  }
  // Warshall closure on the bitset rows.
  for (ElementId k = 0; k < n; ++k) {
    for (ElementId i = 0; i < n; ++i) {
      if (up_[i].contains(k)) up_[i] = up_[i] | up_[k];
    }
  }
  down_.assign(n, Subset{});
  for (ElementId a = 0; a < n; ++a) {
    up_[a].for_each([&](ElementId b) { down_[b] = down_[b].with(a); });
  }
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a + 1; b < n; ++b) {
      if (leq(a, b) && leq(b, a)) {
        throw InvalidInput("poset relations form a cycle through '" + ground_.name(a) + "' and '" +
                           ground_.name(b) + "'");
      }
    }
  }
  for (ElementId a = 0; a < n; ++a) {
    (up_[a].without(a)).for_each([&](ElementId b) {
      const Subset between = (up_[a] & down_[b]).without(a).without(b);
      if (between.empty()) covers_.emplace_back(a, b);
    });
  }
}

ConvexGeometry poset_geometry(const Poset& p) {
  const std::size_t n = p.ground().size();
  require_within_limit(n, kMaxEnumerable, "poset geometry");
  std::vector<Subset> members;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const Subset x(bits);
    Subset above, below;
    x.for_each([&](ElementId e) {
      above = above | p.up(e);
      below = below | p.down(e);
    });
    if ((above & below) == x) members.push_back(x);
  }
  return ConvexGeometry(p.ground(), std::move(members));
}

Poset three_level_poset(std::size_t a, std::size_t b, std::size_t c) {
  if (a == 0 || b == 0 || c == 0) throw InvalidInput("every level of the three-level poset needs an element");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= a; ++i) names.push_back("a" + std::to_string(i));
  for (std::size_t i = 1; i <= b; ++i) names.push_back("b" + std::to_string(i));
  for (std::size_t i = 1; i <= c; ++i) names.push_back("c" + std::to_string(i));
  std::vector<std::pair<ElementId, ElementId>> relations;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) relations.emplace_back(i, a + j);
  }
  for (std::size_t j = 0; j < b; ++j) {
    for (std::size_t k = 0; k < c; ++k) relations.emplace_back(a + j, a + b + k);
  }
  return Poset(GroundSet(std::move(names)), relations);
}

ConvexGeometry planar_points_geometry(const GroundSet& ground, const PointMap& points) {
  const std::size_t n = ground.size();
  if (points.size() != n) throw InvalidInput("point set geometry needs one point per element");
  require_within_limit(n, kMaxEnumerable, "point set geometry");
  for (ElementId i = 0; i < n; ++i) {
    if (points[i].dimension() != points.front().dimension()) throw InvalidInput("point dimensions differ");
    for (ElementId j = i + 1; j < n; ++j) {
      if (points[i] == points[j]) {
        throw InvalidInput("elements '" + ground.name(i) + "' and '" + ground.name(j) + "' share a point");
      }
    }
  }
  std::vector<Subset> members{Subset{}};
  const Subset full = ground.full();
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const Subset x(bits);
    std::vector<RationalPoint> spanning;
    x.for_each([&](ElementId e) { spanning.push_back(points[e]); });
    bool convex = true;
    (full - x).for_each([&](ElementId y) { convex = convex && !in_hull(points[y], spanning).inside; });
    if (convex) members.push_back(x);
  }
  return ConvexGeometry(ground, std::move(members));
}

PointMap line_points(std::size_t n) {
  PointMap points;
  for (std::size_t i = 0; i < n; ++i) points.push_back(RationalPoint{Rational(static_cast<long>(i)), Rational(0)});
  return points;
}

PointMap circle_points(std::size_t n) {
  // t = tan(theta / 2) rounded to a rational gives ((1 - t^2), 2t) / (1 + t^2), exactly on the circle.
  PointMap points;
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    if (2 * k == n) {
      points.push_back(RationalPoint{Rational(-1), Rational(0)});
      continue;
    }
    const double half = std::tan(theta / 2.0);
    Rational t(mpz_class(static_cast<long>(std::llround(half * 1000.0))), mpz_class(1000));
    t.canonicalize();
    const Rational denom = 1 + t * t;
    points.push_back(RationalPoint{Rational((1 - t * t) / denom), Rational(2 * t / denom)});
  }
  return points;
}

OrderingFamily random_ordering_family(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  GroundSet ground = GroundSet::letters(n);
  std::vector<Ordering> orders;
  std::vector<ElementId> ranked(n);
  for (std::size_t i = 0; i < m; ++i) {
    for (ElementId e = 0; e < n; ++e) ranked[e] = e;
    std::shuffle(ranked.begin(), ranked.end(), rng);
    orders.emplace_back(ranked, n);
  }
  return OrderingFamily(std::move(ground), std::move(orders));
}

bool DRelation::contains(ElementId a, ElementId b) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(a, b));
}

DRelation d_relation(const ConvexGeometry& g, std::size_t limit) {
  const std::size_t n = g.n();
  require_within_limit(n, limit, "D-relation");
  std::vector<Subset> successors(n);
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const Subset a_set(bits);
    const Subset hull = closure(g, a_set);
    a_set.for_each([&](ElementId a) {
      const Subset gained = hull - closure(g, a_set.without(a)) - a_set;
      successors[a] = successors[a] | gained;
    });
  }

  DRelation rel;
  for (ElementId a = 0; a < n; ++a) successors[a].for_each([&](ElementId b) { rel.pairs.emplace_back(a, b); });

  // Recursive DFS with white/grey/black colors.
  std::vector<int> color(n, 0);
  std::vector<ElementId> path;
  auto visit = [&](auto& self, ElementId v) -> bool {
    color[v] = 1;
    path.push_back(v);
    bool found = false;
    successors[v].for_each([&](ElementId w) {
      if (found) return;
      if (color[w] == 1) {
        auto start = std::find(path.begin(), path.end(), w);
        rel.cycle = std::vector<ElementId>(start, path.end());
        found = true;
      } else if (color[w] == 0) {
        found = self(self, w);
      }
    });
    path.pop_back();
    color[v] = 2;
    return found;
  };
  for (ElementId v = 0; v < n && !rel.cycle; ++v) {
    if (color[v] == 0) visit(visit, v);
  }
  rel.acyclic = !rel.cycle.has_value();
  return rel;
}

}  // namespace cgx
