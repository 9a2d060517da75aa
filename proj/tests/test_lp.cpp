#include <doctest.h>

#include <random>

#include "unavoidable/lp.hpp"

using namespace unav;
using namespace unav::lp;

namespace {

Rational row_value(const Constraint& c, const std::vector<Rational>& x) {
  Rational v;
  for (std::size_t j = 0; j < x.size(); ++j) v += c.coefficients[j] * x[j];
  return v;
}

bool satisfied(const Constraint& c, const std::vector<Rational>& x) {
  const Rational v = row_value(c, x);
  switch (c.relation) {
    case Relation::kLessEqual: return v <= c.rhs;
    case Relation::kGreaterEqual: return v >= c.rhs;
    case Relation::kEqual: return v == c.rhs;
  }
  return false;
}

/// Multiplier y_i for constraint i in its stated orientation: y >= 0 on <=
/// rows, y <= 0 on >= rows (they are -(>=) flipped), free on equalities,
/// written so that Σ y_i a_i >= c and Σ y_i b_i is an upper bound.
struct Combination {
  std::vector<Rational> lhs;
  Rational rhs;
  bool signs_ok = true;
};

Combination combine(const Program& p, const std::vector<Rational>& y) {
  Combination out;
  out.lhs.assign(p.variables, Rational(0));
  for (std::size_t i = 0; i < p.constraints.size(); ++i) {
    const auto& c = p.constraints[i];
    // Multipliers are reported for the stated orientation, so a >= row
    // contributes -y (a x) <= -y b.
    Rational sign = c.relation == Relation::kGreaterEqual ? Rational(-1) : Rational(1);
    if (c.relation != Relation::kEqual && y[i] < 0) out.signs_ok = false;
    for (int j = 0; j < p.variables; ++j) out.lhs[j] += sign * y[i] * c.coefficients[j];
    out.rhs += sign * y[i] * c.rhs;
  }
  return out;
}

Constraint row(std::vector<int> a, Relation rel, Rational b) {
  Constraint c;
  for (int x : a) c.coefficients.emplace_back(x);
  c.relation = rel;
  c.rhs = std::move(b);
  return c;
}

/// Checks an optimal answer by strong duality: primal feasible, dual
/// feasible (combination dominates the objective), equal values.
void check_optimal(const Program& p, const Solution& s) {
  REQUIRE(s.status == Status::kOptimal);
  for (const auto& x : s.values) CHECK(x >= 0);
  for (const auto& c : p.constraints) CHECK(satisfied(c, s.values));
  Rational value;
  for (int j = 0; j < p.variables; ++j) value += p.objective[j] * s.values[j];
  CHECK(value == s.objective);
  const auto comb = combine(p, s.multipliers);
  CHECK(comb.signs_ok);
  for (int j = 0; j < p.variables; ++j) CHECK(comb.lhs[j] >= p.objective[j]);
  CHECK(comb.rhs == s.objective);
}

/// Infeasibility certificate: the combination has lhs >= 0 componentwise
/// but a negative right-hand side, which no x >= 0 can satisfy.
void check_farkas(const Program& p, const Solution& s) {
  REQUIRE(s.status == Status::kInfeasible);
  const auto comb = combine(p, s.multipliers);
  CHECK(comb.signs_ok);
  for (const auto& a : comb.lhs) CHECK(a >= 0);
  CHECK(comb.rhs < 0);
}

}  // namespace

TEST_CASE("textbook maximization") {
  // max 3x + 2y, x + y <= 4, x + 3y <= 6, x <= 3  ->  x = 3, y = 1, value 11.
  Program p;
  p.variables = 2;
  p.objective = {Rational(3), Rational(2)};
  p.constraints = {row({1, 1}, Relation::kLessEqual, 4), row({1, 3}, Relation::kLessEqual, 6),
                   row({1, 0}, Relation::kLessEqual, 3)};
  const auto s = solve(p);
  check_optimal(p, s);
  CHECK(s.objective == 11);
  CHECK(s.values == std::vector<Rational>{Rational(3), Rational(1)});
}

TEST_CASE("equalities and >= rows need phase one") {
  // max x1 - x2, x1 + x2 = 1, x2 >= 1/3.
  Program p;
  p.variables = 2;
  p.objective = {Rational(1), Rational(-1)};
  p.constraints = {row({1, 1}, Relation::kEqual, 1),
                   row({0, 1}, Relation::kGreaterEqual, Rational(1, 3))};
  const auto s = solve(p);
  check_optimal(p, s);
  CHECK(s.objective == Rational(1, 3));
}

TEST_CASE("infeasible systems come with Farkas multipliers") {
  Program p;
  p.variables = 2;
  p.objective = {Rational(0), Rational(0)};
  p.constraints = {row({1, 1}, Relation::kLessEqual, 1), row({1, 1}, Relation::kGreaterEqual, 2)};
  check_farkas(p, solve(p));

  Program q;
  q.variables = 3;
  q.objective = {Rational(1), Rational(0), Rational(0)};
  q.constraints = {row({1, 1, 1}, Relation::kEqual, 1), row({1, 1, 0}, Relation::kGreaterEqual, 1),
                   row({0, 1, 1}, Relation::kGreaterEqual, 1),
                   row({1, 0, 1}, Relation::kGreaterEqual, 1)};
  check_farkas(q, solve(q));
}

TEST_CASE("unbounded problems are reported") {
  Program p;
  p.variables = 2;
  p.objective = {Rational(1), Rational(1)};
  p.constraints = {row({1, -1}, Relation::kLessEqual, 1)};
  CHECK(solve(p).status == Status::kUnbounded);
}

TEST_CASE("Beale's cycling example terminates under Bland's rule") {
  // max 3/4 x1 - 20 x2 + 1/2 x3 - 6 x4 (Beale 1955); optimum 1/20.
  Program p;
  p.variables = 4;
  p.objective = {Rational(3, 4), Rational(-20), Rational(1, 2), Rational(-6)};
  Constraint c1;
  c1.coefficients = {Rational(1, 4), Rational(-8), Rational(-1), Rational(9)};
  c1.rhs = 0;
  Constraint c2;
  c2.coefficients = {Rational(1, 2), Rational(-12), Rational(-1, 2), Rational(3)};
  c2.rhs = 0;
  Constraint c3;
  c3.coefficients = {Rational(0), Rational(0), Rational(1), Rational(0)};
  c3.rhs = 1;
  p.constraints = {c1, c2, c3};
  const auto s = solve(p);
  check_optimal(p, s);
  CHECK(s.objective == Rational(5, 4));
}

TEST_CASE("random programs satisfy strong duality or carry a certificate") {
  std::mt19937_64 rng(41);
  int optimal = 0;
  int infeasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Program p;
    p.variables = 1 + static_cast<int>(rng() % 5);
    const int rows = 1 + static_cast<int>(rng() % 6);
    for (int j = 0; j < p.variables; ++j) p.objective.emplace_back(static_cast<int>(rng() % 7) - 3);
    for (int i = 0; i < rows; ++i) {
      Constraint c;
      for (int j = 0; j < p.variables; ++j) {
        c.coefficients.emplace_back(static_cast<int>(rng() % 7) - 2);
      }
      c.relation = static_cast<Relation>(rng() % 3);
      c.rhs = Rational(static_cast<int>(rng() % 9) - 2, 1 + rng() % 3);
      p.constraints.push_back(std::move(c));
    }
    // A box keeps most instances bounded.
    for (int j = 0; j < p.variables; ++j) {
      Constraint box;
      box.coefficients.assign(p.variables, Rational(0));
      box.coefficients[j] = 1;
      box.rhs = 5;
      p.constraints.push_back(box);
    }
    const auto s = solve(p);
    if (s.status == Status::kOptimal) {
      check_optimal(p, s);
      ++optimal;
    } else {
      REQUIRE(s.status == Status::kInfeasible);
      check_farkas(p, s);
      ++infeasible;
    }
  }
  CHECK(optimal > 50);
  CHECK(infeasible > 20);
}

TEST_CASE("mismatched widths are rejected") {
  Program p;
  p.variables = 2;
  p.objective = {Rational(1)};
  CHECK_THROWS_AS(solve(p), std::invalid_argument);
  p.objective = {Rational(1), Rational(1)};
  p.constraints = {row({1}, Relation::kLessEqual, 1)};
  CHECK_THROWS_AS(solve(p), std::invalid_argument);
}
