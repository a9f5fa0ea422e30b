#include "cgx/orderings.hpp"

#include <algorithm>
#include <string>

namespace cgx {

Ordering::Ordering(std::vector<ElementId> ranked, std::size_t n) : ranked_(std::move(ranked)), rank_(n, 0) {
  if (ranked_.size() != n) {
    throw InvalidInput("ordering lists " + std::to_string(ranked_.size()) + " elements, expected " +
                       std::to_string(n));
  }
  for (std::size_t pos = 0; pos < n; ++pos) {
    const ElementId e = ranked_[pos];
    if (e >= n || rank_[e] != 0) throw InvalidInput("ordering is not a permutation of the ground set");
    rank_[e] = pos + 1;
  }
}

Subset Ordering::prefix(std::size_t k) const {
  Subset s;
  for (std::size_t pos = 0; pos < k && pos < ranked_.size(); ++pos) s = s.with(ranked_[pos]);
  return s;
}

OrderingFamily::OrderingFamily(GroundSet ground, std::vector<Ordering> orders)
    : ground_(std::move(ground)), orders_(std::move(orders)) {
  if (orders_.empty()) throw InvalidInput("an ordering family needs at least one ordering");
  for (const auto& o : orders_) {
    if (o.size() != ground_.size()) throw InvalidInput("ordering does not cover the ground set");
  }
}

namespace {

// Worst rank of any element of X under o; 0 for X empty.
std::size_t worst_rank(const Ordering& o, Subset x) {
  std::size_t worst = 0;
  x.for_each([&](ElementId e) { worst = std::max(worst, o.rank(e)); });
  return worst;
}

}  // namespace

bool is_generated(const OrderingFamily& f, Subset x) {
  if (x.empty()) return true;
  std::vector<std::size_t> worst;
  worst.reserve(f.m());
  for (const auto& o : f.orders()) worst.push_back(worst_rank(o, x));
  bool ok = true;
  (f.ground().full() - x).for_each([&](ElementId y) {
    if (!ok) return;
    bool beaten = false;
    for (std::size_t i = 0; i < f.m() && !beaten; ++i) beaten = f.orders()[i].rank(y) > worst[i];
    ok = beaten;
  });
  return ok;
}

ConvexGeometry generate(const OrderingFamily& f) {
  require_within_limit(f.n(), kMaxEnumerable, "generate");
  const std::uint64_t count = std::uint64_t{1} << f.n();
  std::vector<Subset> members;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    if (is_generated(f, Subset(bits))) members.push_back(Subset(bits));
  }
  return ConvexGeometry(f.ground(), std::move(members));
}

Subset prefix_closure(const Ordering& o, Subset x) {
  if (x.empty()) throw InvalidInput("prefix closure of the empty set is undefined");
  return o.prefix(worst_rank(o, x));
}

bool extension_dominates(const OrderingFamily& f, Subset x, ElementId a, ElementId b) {
  const Subset with_b = x.with(b);
  return std::all_of(f.orders().begin(), f.orders().end(),
                     [&](const Ordering& o) { return o.rank(a) <= worst_rank(o, with_b); });
}

ElementId extension_element(const OrderingFamily& f, Subset x) {
  const Subset full = f.ground().full();
  if (x == full) throw InvalidInput("extension element requested for X = E");
  if (!x.is_subset_of(full) || !is_generated(f, x)) {
    throw InvalidInput("extension element requested for a set outside the generated geometry");
  }
  const auto outside = (full - x).elements();
  for (ElementId z : outside) {
    const bool maximal = std::none_of(outside.begin(), outside.end(), [&](ElementId b) {
      return b != z && extension_dominates(f, x, b, z);
    });
    if (maximal) return z;
  }
  // Unreachable: >=_X is a partial order on a finite nonempty set.
  throw InternalError("no maximal element found for the extension relation");
}

std::vector<Ordering> compatible_orderings(const ConvexGeometry& g) {
  const std::size_t n = g.n();
  std::vector<Ordering> out;
  std::vector<ElementId> chain;
  chain.reserve(n);

  auto extend = [&](auto& self, Subset prefix) -> void {
    if (chain.size() == n) {
      out.emplace_back(chain, n);
      return;
    }
    for (ElementId e = 0; e < n; ++e) {
      if (prefix.contains(e) || !g.contains(prefix.with(e))) continue;
      chain.push_back(e);
      self(self, prefix.with(e));
      chain.pop_back();
    }
  };
  extend(extend, Subset{});
  return out;
}

}  // namespace cgx
