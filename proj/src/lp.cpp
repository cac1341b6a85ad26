#include "folnewt/lp.hpp"

#include <stdexcept>

namespace folnewt::lp {

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : a_(rows, std::vector<Rational>(cols)), b_(rows), basis_(rows) {}

  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<std::size_t> basis_;

  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return a_.empty() ? 0 : a_[0].size(); }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / a_[r][c];
    for (auto& v : a_[r]) v *= inv;
    b_[r] *= inv;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || a_[i][c] == 0) continue;
      Rational f = a_[i][c];
      for (std::size_t j = 0; j < cols(); ++j) {
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
      }
      b_[i] -= f * b_[r];
    }
    basis_[r] = c;
  }

  /// Runs Bland-rule simplex on `cost` (maximize) over columns < allowed.
  /// Returns false when unbounded.
  bool optimize(const std::vector<Rational>& cost, std::size_t allowed) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        Rational r = cost[j];
        for (std::size_t i = 0; i < rows(); ++i) {
          if (a_[i][j] != 0) r -= cost[basis_[i]] * a_[i][j];
        }
        if (r > 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return true;
      std::size_t leave = rows();
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (a_[i][enter] <= 0) continue;
        Rational ratio = b_[i] / a_[i][enter];
        if (leave == rows() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows()) return false;
      pivot(leave, enter);
    }
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows(); ++i) v += cost[basis_[i]] * b_[i];
    return v;
  }
};

}  // namespace

Solution maximize(const Problem& problem) {
  const std::size_t n = problem.num_vars;
  if (problem.objective.size() != n) throw std::invalid_argument("objective length mismatch");
  const std::size_t m = problem.constraints.size();

  std::size_t slacks = 0, artificials = 0;
  std::vector<Constraint> rows = problem.constraints;
  for (auto& row : rows) {
    if (row.coeffs.size() != n) throw std::invalid_argument("constraint length mismatch");
    if (row.rhs < 0) {
      for (auto& c : row.coeffs) c = -c;
      row.rhs = -row.rhs;
      if (row.sense == Sense::less_equal) {
        row.sense = Sense::greater_equal;
      } else if (row.sense == Sense::greater_equal) {
        row.sense = Sense::less_equal;
      }
    }
    if (row.sense != Sense::equal) ++slacks;
    if (row.sense != Sense::less_equal) ++artificials;
  }

  const std::size_t art_begin = n + slacks;
  const std::size_t cols = art_begin + artificials;
  Tableau t(m, cols);
  std::size_t next_slack = n, next_art = art_begin;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.a_[i][j] = rows[i].coeffs[j];
    t.b_[i] = rows[i].rhs;
    switch (rows[i].sense) {
      case Sense::less_equal:
        t.a_[i][next_slack] = 1;
        t.basis_[i] = next_slack++;
        break;
      case Sense::greater_equal:
        t.a_[i][next_slack++] = -1;
        t.a_[i][next_art] = 1;
        t.basis_[i] = next_art++;
        break;
      case Sense::equal:
        t.a_[i][next_art] = 1;
        t.basis_[i] = next_art++;
        break;
    }
  }

  Solution sol;
  if (artificials > 0) {
    std::vector<Rational> phase1(cols, 0);
    for (std::size_t j = art_begin; j < cols; ++j) phase1[j] = -1;
    t.optimize(phase1, cols);
    if (t.objective(phase1) < 0) {
      sol.status = Status::infeasible;
      return sol;
    }
    // drive zero-level artificials out of the basis; drop redundant rows
    for (std::size_t i = 0; i < t.rows();) {
      if (t.basis_[i] < art_begin) {
        ++i;
        continue;
      }
      std::size_t c = art_begin;
      for (std::size_t j = 0; j < art_begin; ++j) {
        if (t.a_[i][j] != 0) {
          c = j;
          break;
        }
      }
      if (c < art_begin) {
        t.pivot(i, c);
        ++i;
      } else {
        t.a_.erase(t.a_.begin() + static_cast<std::ptrdiff_t>(i));
        t.b_.erase(t.b_.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis_.erase(t.basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::vector<Rational> cost(cols, 0);
  for (std::size_t j = 0; j < n; ++j) cost[j] = problem.objective[j];
  if (!t.optimize(cost, art_begin)) {
    sol.status = Status::unbounded;
    return sol;
  }
  sol.status = Status::optimal;
  sol.x.assign(n, 0);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (t.basis_[i] < n) sol.x[t.basis_[i]] = t.b_[i];
  }
  sol.value = 0;
  for (std::size_t j = 0; j < n; ++j) sol.value += problem.objective[j] * sol.x[j];
  return sol;
}

}  // namespace folnewt::lp
