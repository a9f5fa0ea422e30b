#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "cgx/orderings.hpp"

namespace cgx {

namespace {

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  std::size_t count_and(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }
  bool is_subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }
  Bits minus(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t b = words_[w]; b != 0; b &= b - 1) f(w * 64 + static_cast<std::size_t>(std::countr_zero(b)));
    }
  }
  friend bool operator==(const Bits&, const Bits&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

// Minimum set cover where "sets" are orderings and "items" are (X, y) pairs.
class CoverSearch {
 public:
  CoverSearch(std::vector<Bits> covers, std::size_t items) : covers_(std::move(covers)), items_(items) {
    covering_.resize(items_);
    for (std::size_t s = 0; s < covers_.size(); ++s) covers_[s].for_each([&](std::size_t p) { covering_[p].push_back(s); });
  }

  Bits all_items() const {
    Bits b(items_);
    for (std::size_t p = 0; p < items_; ++p) b.set(p);
    return b;
  }
  Bits sets_from(std::size_t first) const {
    Bits b(covers_.size());
    for (std::size_t s = first; s < covers_.size(); ++s) b.set(s);
    return b;
  }
  const Bits& cover(std::size_t s) const { return covers_[s]; }
  std::size_t num_sets() const { return covers_.size(); }

  std::size_t greedy_size() const {
    Bits uncovered = all_items();
    std::size_t used = 0;
    while (!uncovered.none()) {
      std::size_t best = 0, best_gain = 0;
      for (std::size_t s = 0; s < covers_.size(); ++s) {
        const std::size_t gain = covers_[s].count_and(uncovered);
        if (gain > best_gain) best = s, best_gain = gain;
      }
      if (best_gain == 0) return covers_.size() + 1;
      uncovered = uncovered.minus(covers_[best]);
      ++used;
    }
    return used;
  }

  /// Whether at most `budget` sets drawn from `allowed` cover `uncovered`.
  bool feasible(const Bits& uncovered, Bits allowed, std::size_t budget) const {
    if (uncovered.none()) return true;
    if (budget == 0) return false;

    std::size_t pivot = 0, pivot_options = SIZE_MAX;
    uncovered.for_each([&](std::size_t p) {
      if (pivot_options == 0) return;
      std::size_t options = 0;
      for (std::size_t s : covering_[p]) options += allowed.test(s) ? 1 : 0;
      if (options < pivot_options) pivot = p, pivot_options = options;
    });
    if (pivot_options == 0) return false;

    std::size_t best_gain = 0;
    allowed.for_each([&](std::size_t s) { best_gain = std::max(best_gain, covers_[s].count_and(uncovered)); });
    if (best_gain * budget < uncovered.count()) return false;

    for (std::size_t s : covering_[pivot]) {
      if (!allowed.test(s)) continue;
      allowed.reset(s);
      if (feasible(uncovered.minus(covers_[s]), allowed, budget - 1)) return true;
    }
    return false;
  }

 private:
  std::vector<Bits> covers_;
  std::size_t items_;
  std::vector<std::vector<std::size_t>> covering_;
};

}  // namespace

CdimResult cdim(const ConvexGeometry& g, std::size_t limit) {
  require_within_limit(g.n(), limit, "cdim");
  if (!check_axioms(g).pass()) throw InvalidInput("cdim requires a convex geometry; the family fails the axioms");

  const auto orders = compatible_orderings(g);
  if (orders.empty()) throw InternalError("no compatible ordering for a geometry satisfying the axioms");

  // Item (X, y) for every proper nonempty member X and y outside it.
  const Subset full = g.ground().full();
  std::vector<std::pair<Subset, ElementId>> pairs;
  for (Subset x : g.members()) {
    if (x.empty() || x == full) continue;
    (full - x).for_each([&](ElementId y) { pairs.emplace_back(x, y); });
  }

  // Columns per pair; drop pairs implied by a pair with a smaller covering set.
  std::vector<Bits> pair_cover(pairs.size(), Bits(orders.size()));
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::size_t s = 0; s < orders.size(); ++s) {
      if (!prefix_closure(orders[s], pairs[p].first).contains(pairs[p].second)) pair_cover[p].set(s);
    }
  }
  std::vector<std::size_t> kept;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    bool implied = false;
    for (std::size_t q = 0; q < pairs.size() && !implied; ++q) {
      if (q == p || !pair_cover[q].is_subset_of(pair_cover[p])) continue;
      // Keep the lowest index among identical columns.
      implied = !(pair_cover[q] == pair_cover[p]) || q < p;
    }
    if (!implied) kept.push_back(p);
  }

  std::vector<Bits> covers(orders.size(), Bits(kept.size()));
  for (std::size_t i = 0; i < kept.size(); ++i) {
    pair_cover[kept[i]].for_each([&](std::size_t s) { covers[s].set(i); });
  }
  const CoverSearch search(std::move(covers), kept.size());

  const Bits all = search.all_items();
  const std::size_t upper = search.greedy_size();
  if (upper > orders.size()) throw InternalError("compatible orderings do not cover every (X, y) pair");
  std::size_t k = 0;
  while (k < upper && !search.feasible(all, search.sets_from(0), k)) ++k;
  k = std::max<std::size_t>(k, 1);

  // Lexicographically smallest cover of size k, fixed one index at a time.
  std::vector<Ordering> chosen;
  Bits uncovered = all;
  std::size_t next = 0;
  for (std::size_t step = 0; step < k; ++step) {
    bool placed = false;
    for (std::size_t s = next; s < search.num_sets(); ++s) {
      const Bits rest = uncovered.minus(search.cover(s));
      if (search.feasible(rest, search.sets_from(s + 1), k - step - 1)) {
        chosen.push_back(orders[s]);
        uncovered = rest;
        next = s + 1;
        placed = true;
        break;
      }
    }
    if (!placed) throw InternalError("lexicographic cover reconstruction failed");
  }

  OrderingFamily witness(g.ground(), std::move(chosen));
  if (!(generate(witness) == g)) throw InternalError("cdim witness does not regenerate the geometry");
  return CdimResult{k, std::move(witness)};
}

}  // namespace cgx
