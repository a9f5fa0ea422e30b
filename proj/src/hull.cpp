#include "cgx/hull.hpp"

#include <algorithm>

#include "cgx/lp.hpp"

namespace cgx {

HullMembership in_hull(const RationalPoint& x, std::span<const RationalPoint> s) {
  if (s.empty()) throw InvalidInput("hull membership against an empty point set");
  const std::size_t dim = x.dimension();
  for (const auto& p : s) {
    if (p.dimension() != dim) throw InvalidInput("hull membership: dimension mismatch");
  }

  HullMembership result;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == x) {
      result.inside = true;
      result.weights.assign(s.size(), Rational(0));
      result.weights[k] = 1;
      return result;
    }
  }

  // sum_k alpha_k s_k = x, sum_k alpha_k = 1, alpha >= 0.
  RationalMatrix a(dim + 1, std::vector<Rational>(s.size()));
  std::vector<Rational> b(dim + 1);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < s.size(); ++k) a[i][k] = s[k][i];
    b[i] = x[i];
  }
  for (std::size_t k = 0; k < s.size(); ++k) a[dim][k] = 1;
  b[dim] = 1;

  auto lp = solve_feasibility(a, b);
  result.inside = lp.feasible;
  if (lp.feasible) {
    result.weights = std::move(lp.solution);
  } else {
    // y = (w, t): w.s_k + t <= 0 < w.x + t.
    Separator sep;
    sep.normal.coords.assign(lp.farkas.begin(), lp.farkas.begin() + static_cast<std::ptrdiff_t>(dim));
    sep.threshold = -lp.farkas[dim];
    result.separator = std::move(sep);
  }
  return result;
}

Subset pos_hull_members(Subset p, const PointMap& f) {
  if (p.empty()) throw InvalidInput("Pos hull of the empty set");
  const std::size_t dim = f.at(p.first()).dimension();
  std::vector<Rational> lower = f[p.first()].coords;
  p.for_each([&](ElementId e) {
    for (std::size_t i = 0; i < dim; ++i) lower[i] = std::min(lower[i], f[e][i]);
  });
  Subset out;
  for (ElementId x = 0; x < f.size(); ++x) {
    bool above = true;
    for (std::size_t i = 0; i < dim && above; ++i) above = f[x][i] >= lower[i];
    if (above) out = out.with(x);
  }
  return out;
}

bool dominates_hull_point(const RationalPoint& x, Subset p, const PointMap& f) {
  const std::size_t dim = x.dimension();
  const auto members = p.elements();
  // sum_k alpha_k F(p_k)_i + slack_i = x_i, sum_k alpha_k = 1, alpha, slack >= 0.
  RationalMatrix a(dim + 1, std::vector<Rational>(members.size() + dim));
  std::vector<Rational> b(dim + 1);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < members.size(); ++k) a[i][k] = f[members[k]][i];
    a[i][members.size() + i] = 1;
    b[i] = x[i];
  }
  for (std::size_t k = 0; k < members.size(); ++k) a[dim][k] = 1;
  b[dim] = 1;
  return solve_feasibility(a, b).feasible;
}

Subset ext_hull_members(Subset p, const PointMap& f) {
  if (p.empty()) throw InvalidInput("ExtHull of the empty set");
  Subset out;
  for (ElementId x = 0; x < f.size(); ++x) {
    if (p.contains(x) || dominates_hull_point(f[x], p, f)) out = out.with(x);
  }
  return out;
}

ShellingInstance::ShellingInstance(GroundSet ground, PointMap points, std::vector<RationalPoint> q)
    : ground_(std::move(ground)), points_(std::move(points)), q_(std::move(q)) {
  if (points_.size() != ground_.size()) throw InvalidInput("shelling instance needs one point per element");
  if (q_.empty()) throw InvalidInput("shelling instance needs a nonempty Q");
  dimension_ = points_.front().dimension();
  if (dimension_ == 0) throw InvalidInput("shelling instance points must have positive dimension");
  for (const auto& p : points_) {
    if (p.dimension() != dimension_) throw InvalidInput("shelling instance: point dimensions differ");
  }
  for (const auto& p : q_) {
    if (p.dimension() != dimension_) throw InvalidInput("shelling instance: Q dimension differs from G");
  }
  for (ElementId i = 0; i < points_.size(); ++i) {
    for (ElementId j = i + 1; j < points_.size(); ++j) {
      if (points_[i] == points_[j]) {
        throw InvalidInput("shelling instance: elements '" + ground_.name(i) + "' and '" + ground_.name(j) +
                           "' share a point");
      }
    }
    if (in_hull(points_[i], q_)) {
      throw InvalidInput("shelling instance: point of '" + ground_.name(i) + "' lies in Hull(Q)");
    }
  }
}

Subset ShellingInstance::hull_trace(Subset x) const {
  std::vector<RationalPoint> spanning = q_;
  x.for_each([&](ElementId e) { spanning.push_back(points_[e]); });
  Subset out = x;
  for (ElementId y = 0; y < points_.size(); ++y) {
    if (!x.contains(y) && in_hull(points_[y], spanning)) out = out.with(y);
  }
  return out;
}

ConvexGeometry shelling_geometry(const ShellingInstance& inst) {
  require_within_limit(inst.ground().size(), kMaxEnumerable, "shelling geometry");
  const std::uint64_t count = std::uint64_t{1} << inst.ground().size();
  std::vector<Subset> members;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const Subset x(bits);
    if (inst.hull_trace(x) == x) members.push_back(x);
  }
  return ConvexGeometry(inst.ground(), std::move(members));
}

}  // namespace cgx
