#include <algorithm>

#include "cgx/shelling.hpp"

namespace cgx {

namespace {

// Positions [l, r] whose hull together with a point in gap k captures nothing else.
bool interval_is_trace(std::size_t l, std::size_t r, std::size_t gap) { return l <= gap && r + 1 >= gap; }

Subset interval(const std::vector<ElementId>& order, std::size_t l, std::size_t r) {
  Subset s;
  for (std::size_t p = l; p <= r; ++p) s = s.with(order[p]);
  return s;
}

}  // namespace

ConvexGeometry line_geometry(const GroundSet& ground, const LineRealization& r) {
  const std::size_t n = r.order.size();
  std::vector<Subset> members{Subset{}};
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t right = l; right < n; ++right) {
      if (interval_is_trace(l, right, r.gap)) members.push_back(interval(r.order, l, right));
    }
  }
  return ConvexGeometry(ground, std::move(members));
}

std::optional<LineRealization> decide_dim1(const ConvexGeometry& g, std::size_t limit) {
  const std::size_t n = g.n();
  require_within_limit(n, limit, "dimension-1 search");

  for (std::size_t gap = 0; gap <= n; ++gap) {
    std::size_t expected = 1;
    for (std::size_t l = 0; l < n; ++l) {
      for (std::size_t r = l; r < n; ++r) expected += interval_is_trace(l, r, gap) ? 1 : 0;
    }
    if (expected != g.size()) continue;

    // Place elements left to right; every completed trace interval must be convex.
    std::vector<ElementId> order;
    Subset used;
    auto place = [&](auto& self) -> bool {
      const std::size_t pos = order.size();
      if (pos == n) return true;
      for (ElementId e = 0; e < n; ++e) {
        if (used.contains(e)) continue;
        order.push_back(e);
        used = used.with(e);
        bool consistent = true;
        for (std::size_t l = 0; l <= pos && consistent; ++l) {
          if (interval_is_trace(l, pos, gap)) consistent = g.contains(interval(order, l, pos));
        }
        if (consistent && self(self)) return true;
        used = used.without(e);
        order.pop_back();
      }
      return false;
    };
    // All trace intervals are convex and distinct, and the counts agree, so the families match.
    if (place(place)) return LineRealization{order, gap};
  }
  return std::nullopt;
}

DimReport dim_report(const ConvexGeometry& g, std::size_t limit) {
  DimReport report;
  report.cdim = cdim(g, limit).k;
  report.upper_bound = std::min(g.n(), report.cdim);
  report.dim1 = decide_dim1(g, limit).has_value();
  if (report.dim1) {
    report.lower_bound = 1;
    report.dim_exact = 1;
  } else {
    report.lower_bound = 2;
    if (report.upper_bound == 2) report.dim_exact = 2;
  }
  return report;
}

}  // namespace cgx
