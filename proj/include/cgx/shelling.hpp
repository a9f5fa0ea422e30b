#pragma once

#include <optional>
#include <vector>

#include "cgx/hull.hpp"
#include "cgx/orderings.hpp"
#include "cgx/report.hpp"

namespace cgx {

/// Orderings realized as coordinate orders in Q^M, plus the external set
/// Q = {0} + {lambda e_i}.
///
/// Element x maps to F(x) with F_i(x) = -(M+1)^rank_i(x), so every coordinate is a
/// negative integer and x beats y in order i iff F_i(x) > F_i(y).
struct ShellingEmbedding {
  OrderingFamily family;
  Rational lambda;
  ShellingInstance instance;
  /// True when the default lambda was replaced by sufficient_lambda().
  bool lambda_raised = false;

  const PointMap& points() const { return instance.points(); }
  const std::vector<RationalPoint>& q() const { return instance.q(); }
};

/// (M+1)^(M+1), the constant from the construction's proof. Exact verification shows it
/// is too small once |E| exceeds M + 1.
Rational default_lambda(std::size_t m);

/// M (M+1)^(2N), a lambda that provably makes Hull(P + Q) and ExtHull(P) agree on F(E):
/// with K = (M+1)^N, each x in ExtHull(P) outside P is (1 - 1/K) y + (1/K) K u for some
/// y in Hull(P) and u > 0 with K u_j < K^2. For M = 1 any positive lambda works.
Rational sufficient_lambda(std::size_t m, std::size_t n);

/// Builds the embedding with an explicit lambda, or chooses one.
///
/// An explicit lambda is used as given; it must be positive, except that zero is allowed
/// for M = 1 (then Q = {0}). Without one, default_lambda(M) is tried first and kept when
/// the round trip verifies; otherwise sufficient_lambda(M, N) is used and verified. Past
/// `limit` elements no verification runs and sufficient_lambda is used directly.
ShellingEmbedding embed_shelling(const OrderingFamily& f, std::optional<Rational> lambda = std::nullopt,
                                 std::size_t limit = kDefaultLimit);

/// Shelling geometry of the instance, pulled back along x -> F(x) and compared with g.
/// g must be over the same element names.
VerificationReport verify_roundtrip(const ShellingEmbedding& e, const ConvexGeometry& g);

/// Same comparison for an arbitrary instance.
VerificationReport verify_shelling(const ShellingInstance& inst, const ConvexGeometry& g);

/// Pos(P) and ExtHull(P) agree on F(E) for every nonempty P.
VerificationReport verify_pos_equals_ext_hull(const ShellingEmbedding& e);

/// Hull(F(P) + Q) and ExtHull(P) agree on F(E) for every nonempty P.
VerificationReport verify_hull_equals_ext_hull(const ShellingEmbedding& e);

/// A realization on the real line: elements left to right, and the gap holding Hull(Q).
/// Gap k sits between positions k-1 and k (0 = left of every element, N = right of all).
struct LineRealization {
  std::vector<ElementId> order;
  std::size_t gap = 0;
};

/// Decides whether g is a generalized convex shelling in R, returning the first
/// realization in (gap, left-to-right order) lexicographic order.
/// Throws LimitExceeded when |E| > limit.
std::optional<LineRealization> decide_dim1(const ConvexGeometry& g, std::size_t limit = kDefaultLimit);

/// Shelling geometry of a line realization, computed from its combinatorics alone.
ConvexGeometry line_geometry(const GroundSet& ground, const LineRealization& r);

struct DimReport {
  std::size_t cdim = 0;
  /// min(|E|, cdim).
  std::size_t upper_bound = 0;
  std::size_t lower_bound = 0;
  bool dim1 = false;
  std::optional<std::size_t> dim_exact;
};

/// Geometric dimension, exact when dim1 decides it or the bounds squeeze to 2.
DimReport dim_report(const ConvexGeometry& g, std::size_t limit = kDefaultLimit);

}  // namespace cgx
