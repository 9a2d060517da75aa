#pragma once

#include <vector>

#include "unavoidable/rational.hpp"

namespace unav::lp {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct Constraint {
  std::vector<Rational> coefficients;  // one per variable
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

/// maximize objective·x subject to the constraints and x >= 0.
struct Program {
  int variables = 0;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Solution {
  Status status = Status::kInfeasible;
  Rational objective;
  /// Primal values (kOptimal only).
  std::vector<Rational> values;
  /// One multiplier per constraint, for the constraint in its stated
  /// orientation (>= 0 for inequalities, signed for equalities).
  /// kOptimal: optimal dual solution. kInfeasible: Farkas multipliers from
  /// phase one, whose combination of the constraints is contradictory.
  std::vector<Rational> multipliers;
  int pivots = 0;
};

/// Exact two-phase simplex on a dictionary (rows: basic variables, columns:
/// nonbasic variables) with Bland's smallest-index rule, so it terminates
/// on degenerate problems.
Solution solve(const Program& program);

}  // namespace unav::lp
