#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "cgx/geometry.hpp"

namespace cgx {

/// A total order on E, listed best-first.
///
/// rank(x) is 1-based: ranked()[rank(x) - 1] == x.
class Ordering {
 public:
  Ordering() = default;
  /// Throws InvalidInput unless `ranked` is a permutation of {0, ..., n-1}.
  Ordering(std::vector<ElementId> ranked, std::size_t n);

  std::size_t size() const { return ranked_.size(); }
  const std::vector<ElementId>& ranked() const { return ranked_; }
  std::size_t rank(ElementId x) const { return rank_[x]; }
  /// True iff x is strictly better than y.
  bool prefers(ElementId x, ElementId y) const { return rank_[x] < rank_[y]; }
  /// The top-k elements.
  Subset prefix(std::size_t k) const;

  friend bool operator==(const Ordering& a, const Ordering& b) { return a.ranked_ == b.ranked_; }
  friend auto operator<=>(const Ordering& a, const Ordering& b) { return a.ranked_ <=> b.ranked_; }

 private:
  std::vector<ElementId> ranked_;
  std::vector<std::size_t> rank_;
};

/// M >= 1 orderings over one ground set.
class OrderingFamily {
 public:
  OrderingFamily(GroundSet ground, std::vector<Ordering> orders);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Ordering>& orders() const { return orders_; }
  std::size_t m() const { return orders_.size(); }
  std::size_t n() const { return ground_.size(); }

  friend bool operator==(const OrderingFamily&, const OrderingFamily&) = default;

 private:
  GroundSet ground_;
  std::vector<Ordering> orders_;
};

/// The geometry generated by the family: the empty set together with every X such that
/// each y outside X is beaten by all of X in at least one order.
ConvexGeometry generate(const OrderingFamily& f);

/// Whether X is a member of generate(f), without enumerating the family.
bool is_generated(const OrderingFamily& f, Subset x);

/// Smallest prefix of o containing X. Throws InvalidInput on X empty.
Subset prefix_closure(const Ordering& o, Subset x);

/// A maximal element of E \ X under the relation
///   a >=_X b  iff  for every order i some y in X + {b} has a >=_i y,
/// ties broken by smallest index. X + {z} is again generated.
/// Throws InvalidInput unless X is generated and X != E.
ElementId extension_element(const OrderingFamily& f, Subset x);

/// Whether a >=_X b holds (exposed for tests).
bool extension_dominates(const OrderingFamily& f, Subset x, ElementId a, ElementId b);

/// Every ordering all of whose prefixes are members of g, in lexicographic order.
std::vector<Ordering> compatible_orderings(const ConvexGeometry& g);

struct CdimResult {
  std::size_t k = 0;
  OrderingFamily witness;
};

/// Convex dimension: the least number of orderings generating g, with a witness.
///
/// Exact minimum set cover over the pairs (X, y), X in g \ {empty, E}, y outside X,
/// where a compatible ordering covers (X, y) iff y lies outside the ordering's
/// prefix closure of X. Among optimal covers the lexicographically smallest
/// (by position in compatible_orderings order) is returned.
/// Throws LimitExceeded when |E| > limit and InvalidInput when g fails the axioms.
CdimResult cdim(const ConvexGeometry& g, std::size_t limit = kDefaultLimit);

}  // namespace cgx
