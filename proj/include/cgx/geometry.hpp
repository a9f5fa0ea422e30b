#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cgx/error.hpp"
#include "cgx/subset.hpp"

namespace cgx {

/// A named finite ground set E with stable element indices.
class GroundSet {
 public:
  GroundSet() = default;
  /// Throws InvalidInput on an empty list, empty names, duplicates, or more than 64 names.
  explicit GroundSet(std::vector<std::string> names);

  /// Ground set named a, b, c, ... (e26, e27, ... past z).
  static GroundSet letters(std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::string& name(ElementId e) const { return names_.at(e); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<ElementId> find(std::string_view name) const;
  /// Throws InvalidInput for unknown names.
  ElementId index_of(std::string_view name) const;
  Subset full() const { return Subset::full(names_.size()); }

  Subset subset_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(Subset s) const;
  /// "{a,b}" style rendering for diagnostics.
  std::string format(Subset s) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, ElementId> index_;
};

/// An explicit family of subsets of a ground set that contains the empty set and E.
///
/// Construction validates only structure (membership of the empty set and E, every
/// member inside E) and deduplicates. Closure under intersection and the
/// extension property are what check_axioms() inspects.
class ConvexGeometry {
 public:
  ConvexGeometry(GroundSet ground, std::vector<Subset> convex);

  const GroundSet& ground() const { return ground_; }
  std::size_t n() const { return ground_.size(); }
  /// Members in SubsetOrder.
  const std::vector<Subset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Subset s) const { return index_.count(s) != 0; }

  /// Same ground set (names and order) and the same family.
  friend bool operator==(const ConvexGeometry& a, const ConvexGeometry& b) {
    return a.ground_ == b.ground_ && a.members_ == b.members_;
  }

 private:
  GroundSet ground_;
  std::vector<Subset> members_;
  std::unordered_set<Subset> index_;
};

struct AxiomReport {
  bool contains_empty_and_ground = true;
  bool intersection_closed = true;
  /// First (in canonical order) pair whose intersection is missing.
  std::optional<std::pair<Subset, Subset>> intersection_witness;
  bool extensible = true;
  /// First member X != E with no single-element convex extension.
  std::optional<Subset> extension_witness;

  bool pass() const { return contains_empty_and_ground && intersection_closed && extensible; }
};

/// Evaluates all three axioms of a convex geometry; never fails fast.
AxiomReport check_axioms(const ConvexGeometry& g);

struct AntiExchangeViolation {
  Subset base;
  ElementId y;
  ElementId z;
};

/// First triple (X, y, z) with z in cl(X+y) and y in cl(X+z), or nullopt.
/// Requires only intersection closure (so that closure() is meaningful).
std::optional<AntiExchangeViolation> find_anti_exchange_violation(const ConvexGeometry& g);

struct AntiExchangeReport {
  bool pass = true;
  std::optional<AntiExchangeViolation> violation;
};

/// Anti-exchange check; throws InvalidInput when check_axioms(g) fails.
AntiExchangeReport check_anti_exchange(const ConvexGeometry& g);

/// Intersection of all members containing a.
Subset closure(const ConvexGeometry& g, Subset a);

/// Set-family equality over a shared ground set.
bool equals(const ConvexGeometry& a, const ConvexGeometry& b);

/// First subset in SubsetOrder that is a member of exactly one of a, b (same ground size).
std::optional<Subset> first_difference(const ConvexGeometry& a, const ConvexGeometry& b);

/// The same family re-indexed onto `target`, matching elements by name.
/// Throws InvalidInput when the two ground sets do not have the same names.
ConvexGeometry relabel(const ConvexGeometry& g, const GroundSet& target);

/// psi[i] is the image in b's ground set of element i of a's ground set.
using Bijection = std::vector<ElementId>;

/// Lexicographically smallest bijection psi with psi(X) in b iff X in a, or nullopt.
/// Throws LimitExceeded when |E| > limit.
std::optional<Bijection> is_isomorphic(const ConvexGeometry& a, const ConvexGeometry& b,
                                       std::size_t limit = kDefaultIsomorphismLimit);

Subset apply_bijection(const Bijection& psi, Subset s);

}  // namespace cgx
