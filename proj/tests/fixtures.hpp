#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "cgx/generators.hpp"
#include "cgx/orderings.hpp"
#include "oracles.hpp"

namespace cgx::test {

/// Geometry from member lists written with element names.
inline ConvexGeometry family(const std::vector<std::string>& ground,
                             const std::vector<std::vector<std::string>>& members) {
  GroundSet g(ground);
  std::vector<Subset> subsets;
  for (const auto& m : members) subsets.push_back(g.subset_of(m));
  return ConvexGeometry(g, subsets);
}

inline OrderingFamily orders(const std::vector<std::string>& ground,
                             const std::vector<std::vector<std::string>>& lists) {
  GroundSet g(ground);
  std::vector<Ordering> out;
  for (const auto& l : lists) {
    std::vector<ElementId> ranked;
    for (const auto& name : l) ranked.push_back(g.index_of(name));
    out.emplace_back(ranked, g.size());
  }
  return OrderingFamily(g, out);
}

inline ConvexGeometry fan3() {
  return family({"a", "b", "c"}, {{}, {"a"}, {"a", "b"}, {"a", "c"}, {"a", "b", "c"}});
}

inline OrderingFamily fan3_orders() {
  return orders({"a", "b", "c"}, {{"a", "b", "c"}, {"a", "c", "b"}});
}

inline ConvexGeometry power_set(std::size_t n) {
  std::vector<Subset> all;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) all.emplace_back(b);
  return ConvexGeometry(GroundSet::letters(n), all);
}

inline ConvexGeometry chain(std::size_t n) {
  std::vector<Subset> members;
  for (std::size_t k = 0; k <= n; ++k) members.push_back(Subset::full(k));
  return ConvexGeometry(GroundSet::letters(n), members);
}

inline ConvexGeometry line4() { return planar_points_geometry(GroundSet::letters(4), line_points(4)); }

/// Library geometry as an oracle family.
inline oracle::Family as_family(const ConvexGeometry& g) {
  oracle::Family out;
  for (Subset s : g.members()) out.insert(oracle::to_list(s.bits()));
  return out;
}

/// Library ordering family as oracle permutations.
inline std::vector<oracle::Perm> as_perms(const OrderingFamily& f) {
  std::vector<oracle::Perm> out;
  for (const auto& o : f.orders()) {
    oracle::Perm p;
    for (ElementId e : o.ranked()) p.push_back(static_cast<int>(e));
    out.push_back(p);
  }
  return out;
}

/// Random family of subsets containing the empty set and E (no other guarantees).
inline ConvexGeometry random_family(std::size_t n, std::mt19937_64& rng, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<Subset> members{Subset{}, Subset::full(n)};
  for (std::uint64_t b = 1; b + 1 < (std::uint64_t{1} << n); ++b) {
    if (keep(rng)) members.emplace_back(b);
  }
  return ConvexGeometry(GroundSet::letters(n), members);
}

/// Closes a family under pairwise intersection.
inline ConvexGeometry intersection_closure(const ConvexGeometry& g) {
  std::vector<Subset> members = g.members();
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t count = members.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        const Subset s = members[i] & members[j];
        if (std::find(members.begin(), members.end(), s) == members.end()) {
          members.push_back(s);
          grew = true;
        }
      }
    }
  }
  return ConvexGeometry(g.ground(), members);
}

}  // namespace cgx::test
