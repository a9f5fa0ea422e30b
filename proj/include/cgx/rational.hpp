#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace cgx {

/// Exact arbitrary-precision rational. Library results are canonical; values built with the
/// two-argument constructor are not reduced until arithmetic touches them.
using Rational = mpq_class;

/// Parses "num/den" or an integer. Throws InvalidInput on malformed text or den = 0.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" text, or "num" for integers.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// A point of Q^M.
struct RationalPoint {
  std::vector<Rational> coords;

  RationalPoint() = default;
  explicit RationalPoint(std::vector<Rational> c) : coords(std::move(c)) {}
  RationalPoint(std::initializer_list<Rational> c) : coords(c) {}

  std::size_t dimension() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) { return a.coords == b.coords; }
  /// Lexicographic by coordinate.
  friend bool operator<(const RationalPoint& a, const RationalPoint& b) { return a.coords < b.coords; }
};

std::string to_string(const RationalPoint& p);

}  // namespace cgx
