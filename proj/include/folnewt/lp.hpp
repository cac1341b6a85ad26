#pragma once

#include <cstddef>
#include <vector>

#include "folnewt/polynomial.hpp"

namespace folnewt::lp {

enum class Sense { less_equal, equal, greater_equal };

struct Constraint {
  std::vector<Rational> coeffs;
  Sense sense = Sense::less_equal;
  Rational rhs;
};

/// maximize objective·x subject to constraints and x >= 0.
struct Problem {
  std::size_t num_vars = 0;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
};

enum class Status { optimal, infeasible, unbounded };

struct Solution {
  Status status = Status::infeasible;
  Rational value;
  std::vector<Rational> x;
};

/// Exact two-phase tableau simplex with Bland's anti-cycling rule.
Solution maximize(const Problem& problem);

}  // namespace folnewt::lp
