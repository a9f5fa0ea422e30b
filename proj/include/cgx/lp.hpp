#pragma once

#include <vector>

#include "cgx/rational.hpp"

namespace cgx {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct FeasibilityResult {
  bool feasible = false;
  /// When feasible: a basic solution x >= 0 with A x = b.
  std::vector<Rational> solution;
  /// When infeasible: a Farkas certificate y with y^T A <= 0 and y^T b > 0.
  std::vector<Rational> farkas;
};

/// Decides whether {x >= 0 : A x = b} is nonempty, exactly.
///
/// Phase-1 simplex over rationals with Bland's rule, so it terminates without any
/// tolerance. A is row-major with every row of equal length; b has one entry per row.
FeasibilityResult solve_feasibility(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace cgx
