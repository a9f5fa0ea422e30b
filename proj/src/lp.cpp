#include "cgx/lp.hpp"

#include "cgx/error.hpp"

namespace cgx {

namespace {

class Phase1Tableau {
 public:
  Phase1Tableau(const RationalMatrix& a, const std::vector<Rational>& b)
      : rows_(a.size()), vars_(rows_ == 0 ? 0 : a.front().size()), flipped_(rows_, false), basis_(rows_) {
    const std::size_t width = vars_ + rows_ + 1;
    table_.assign(rows_, std::vector<Rational>(width));
    cost_.assign(width, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (a[i].size() != vars_) throw InvalidInput("constraint matrix rows differ in length");
      flipped_[i] = sgn(b[i]) < 0;
      for (std::size_t j = 0; j < vars_; ++j) table_[i][j] = flipped_[i] ? Rational(-a[i][j]) : a[i][j];
      table_[i][vars_ + i] = 1;
      table_[i][width - 1] = flipped_[i] ? Rational(-b[i]) : b[i];
      basis_[i] = vars_ + i;
      // Reduced costs of the phase-1 objective (sum of artificials); last entry is -z.
      for (std::size_t j = 0; j < vars_; ++j) cost_[j] -= table_[i][j];
      cost_[width - 1] -= table_[i][width - 1];
    }
  }

  void optimize() {
    const std::size_t rhs = vars_ + rows_;
    for (;;) {
      std::size_t entering = rhs;
      for (std::size_t j = 0; j < rhs; ++j) {
        if (sgn(cost_[j]) < 0) {
          entering = j;
          break;
        }
      }
      if (entering == rhs) return;

      std::size_t leaving = rows_;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (sgn(table_[i][entering]) <= 0) continue;
        Rational ratio = table_[i][rhs] / table_[i][entering];
        if (leaving == rows_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == rows_) throw InternalError("phase-1 simplex reported an unbounded direction");
      pivot(leaving, entering);
    }
  }

  bool feasible() const { return sgn(cost_.back()) == 0; }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(vars_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < vars_) x[basis_[i]] = table_[i].back();
    }
    return x;
  }

  std::vector<Rational> farkas() const {
    std::vector<Rational> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      y[i] = 1 - cost_[vars_ + i];
      if (flipped_[i]) y[i] = -y[i];
    }
    return y;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    auto& prow = table_[r];
    const Rational p = prow[c];
    for (auto& v : prow) {
      if (sgn(v) != 0) v /= p;
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (sgn(row[c]) == 0) return;
      const Rational factor = row[c];
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (sgn(prow[j]) != 0) row[j] -= factor * prow[j];
      }
    };
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i != r) eliminate(table_[i]);
    }
    eliminate(cost_);
    basis_[r] = c;
  }

  std::size_t rows_;
  std::size_t vars_;
  std::vector<bool> flipped_;
  std::vector<std::size_t> basis_;
  std::vector<std::vector<Rational>> table_;
  std::vector<Rational> cost_;
};

}  // namespace

FeasibilityResult solve_feasibility(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw InvalidInput("constraint matrix and right-hand side disagree in length");
  Phase1Tableau tableau(a, b);
  tableau.optimize();
  FeasibilityResult result;
  result.feasible = tableau.feasible();
  if (result.feasible) {
    result.solution = tableau.solution();
  } else {
    result.farkas = tableau.farkas();
  }
  return result;
}

}  // namespace cgx
