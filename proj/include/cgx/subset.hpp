#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace cgx {

/// Index of an element within its GroundSet.
using ElementId = std::size_t;

/// Largest ground set a Subset can address.
inline constexpr std::size_t kMaxElements = 64;

/// A subset of a ground set of at most 64 elements, stored as a bit vector.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  /// The set {0, ..., n-1}.
  static constexpr Subset full(std::size_t n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr Subset singleton(ElementId e) { return Subset(std::uint64_t{1} << e); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

  constexpr bool contains(ElementId e) const { return (bits_ >> e) & 1U; }
  constexpr Subset with(ElementId e) const { return Subset(bits_ | (std::uint64_t{1} << e)); }
  constexpr Subset without(ElementId e) const { return Subset(bits_ & ~(std::uint64_t{1} << e)); }
  constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }

  /// Smallest element; undefined on the empty set.
  constexpr ElementId first() const { return static_cast<ElementId>(std::countr_zero(bits_)); }

  std::vector<ElementId> elements() const;

  /// Calls f(e) for each element in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      f(static_cast<ElementId>(std::countr_zero(b)));
    }
  }

  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  /// Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset a, Subset b) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical family order: by cardinality, then by bit pattern.
struct SubsetOrder {
  bool operator()(Subset a, Subset b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  }
};

}  // namespace cgx

template <>
struct std::hash<cgx::Subset> {
  std::size_t operator()(cgx::Subset s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
