#include "unavoidable/lp.hpp"

#include <optional>
#include <stdexcept>

namespace unav::lp {

namespace {

/// A <= row derived from a user constraint; equalities produce two rows.
struct Row {
  std::vector<Rational> coefficients;
  Rational rhs;
  int source = 0;
  int sign = 1;  // +1 if the row keeps the constraint's orientation
};

/// x_basic[i] = constant[i] + Σ_j coef[i][j] · x_nonbasic[j]
/// z          = z0          + Σ_j cost[j]    · x_nonbasic[j]
class Dictionary {
 public:
  std::vector<int> basic;
  std::vector<int> nonbasic;
  std::vector<Rational> constant;
  std::vector<std::vector<Rational>> coef;
  Rational z0;
  std::vector<Rational> cost;
  int pivots = 0;

  int rows() const { return static_cast<int>(basic.size()); }
  int cols() const { return static_cast<int>(nonbasic.size()); }

  void pivot(int leave_row, int enter_col) {
    ++pivots;
    const Rational a = coef[leave_row][enter_col];
    // Solve the leaving row for the entering variable.
    auto& row = coef[leave_row];
    const Rational inv = Rational(1) / a;
    for (int j = 0; j < cols(); ++j) row[j] = (j == enter_col) ? inv : -row[j] * inv;
    constant[leave_row] = -constant[leave_row] * inv;

    auto substitute = [&](std::vector<Rational>& target, Rational& target_const) {
      const Rational factor = target[enter_col];
      if (factor == 0) return;
      target_const += factor * constant[leave_row];
      for (int j = 0; j < cols(); ++j) {
        if (j == enter_col) {
          target[j] = factor * row[j];
        } else if (row[j] != 0) {
          target[j] += factor * row[j];
        }
      }
    };
    for (int i = 0; i < rows(); ++i) {
      if (i != leave_row) substitute(coef[i], constant[i]);
    }
    substitute(cost, z0);
    std::swap(basic[leave_row], nonbasic[enter_col]);
  }

  /// Runs Bland's rule to optimality. Returns false when unbounded.
  bool optimize() {
    while (true) {
      int enter = -1;
      for (int j = 0; j < cols(); ++j) {
        if (cost[j] > 0 && (enter < 0 || nonbasic[j] < nonbasic[enter])) enter = j;
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best_ratio;
      for (int i = 0; i < rows(); ++i) {
        if (coef[i][enter] >= 0) continue;
        const Rational ratio = constant[i] / -coef[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basic[i] < basic[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  std::optional<int> column_of(int var) const {
    for (int j = 0; j < cols(); ++j) {
      if (nonbasic[j] == var) return j;
    }
    return std::nullopt;
  }
  std::optional<int> row_of(int var) const {
    for (int i = 0; i < rows(); ++i) {
      if (basic[i] == var) return i;
    }
    return std::nullopt;
  }
};

std::vector<Row> expand(const Program& p) {
  std::vector<Row> rows;
  for (int c = 0; c < static_cast<int>(p.constraints.size()); ++c) {
    const auto& con = p.constraints[c];
    if (static_cast<int>(con.coefficients.size()) != p.variables) {
      throw std::invalid_argument("constraint width does not match the variable count");
    }
    auto negated = [&] {
      Row r{con.coefficients, -con.rhs, c, -1};
      for (auto& x : r.coefficients) x = -x;
      return r;
    };
    switch (con.relation) {
      case Relation::kLessEqual:
        rows.push_back({con.coefficients, con.rhs, c, 1});
        break;
      case Relation::kGreaterEqual:
        rows.push_back(negated());
        break;
      case Relation::kEqual:
        rows.push_back({con.coefficients, con.rhs, c, 1});
        rows.push_back(negated());
        break;
    }
  }
  return rows;
}

/// Reads multipliers of the expanded rows off the objective row (slack
/// variable n + i belongs to row i) and folds them back onto constraints.
std::vector<Rational> constraint_multipliers(const Dictionary& d, const std::vector<Row>& rows,
                                             int n, std::size_t constraint_count) {
  std::vector<Rational> out(constraint_count);
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    const auto col = d.column_of(n + i);
    if (!col) continue;
    const Rational y = -d.cost[*col];
    const auto& row = rows[i];
    const bool equality = i + 1 < static_cast<int>(rows.size()) && rows[i + 1].source == row.source;
    const bool second_of_equality = i > 0 && rows[i - 1].source == row.source;
    if (equality || second_of_equality) {
      out[row.source] += row.sign * y;
    } else {
      out[row.source] += y;
    }
  }
  return out;
}

}  // namespace

Solution solve(const Program& program) {
  const int n = program.variables;
  if (static_cast<int>(program.objective.size()) != n) {
    throw std::invalid_argument("objective width does not match the variable count");
  }
  const std::vector<Row> rows = expand(program);
  const int m = static_cast<int>(rows.size());
  const int aux = n + m;

  Dictionary d;
  d.nonbasic.resize(n);
  for (int j = 0; j < n; ++j) d.nonbasic[j] = j;
  for (int i = 0; i < m; ++i) {
    d.basic.push_back(n + i);
    d.constant.push_back(rows[i].rhs);
    std::vector<Rational> r(n);
    for (int j = 0; j < n; ++j) r[j] = -rows[i].coefficients[j];
    d.coef.push_back(std::move(r));
  }
  d.cost.assign(n, Rational(0));

  Solution out;
  int most_negative = -1;
  for (int i = 0; i < m; ++i) {
    if (d.constant[i] < 0 &&
        (most_negative < 0 || d.constant[i] < d.constant[most_negative])) {
      most_negative = i;
    }
  }

  if (most_negative >= 0) {
    // Phase one: maximize -x0 subject to every row relaxed by x0.
    d.nonbasic.push_back(aux);
    for (auto& r : d.coef) r.push_back(Rational(1));
    d.cost.push_back(Rational(-1));
    d.pivot(most_negative, n);
    d.optimize();
    if (d.z0 < 0) {
      out.status = Status::kInfeasible;
      out.multipliers = constraint_multipliers(d, rows, n, program.constraints.size());
      out.pivots = d.pivots;
      return out;
    }
    if (const auto r = d.row_of(aux)) {
      // x0 sits in the basis at level zero; swap it for any usable column.
      int col = -1;
      for (int j = 0; j < d.cols(); ++j) {
        if (d.coef[*r][j] != 0 && (col < 0 || d.nonbasic[j] < d.nonbasic[col])) col = j;
      }
      if (col < 0) {
        // The row is identically zero; drop it.
        d.basic.erase(d.basic.begin() + *r);
        d.constant.erase(d.constant.begin() + *r);
        d.coef.erase(d.coef.begin() + *r);
      } else {
        d.pivot(*r, col);
      }
    }
    const int col = *d.column_of(aux);
    d.nonbasic.erase(d.nonbasic.begin() + col);
    for (auto& r : d.coef) r.erase(r.begin() + col);
    d.cost.assign(d.cols(), Rational(0));
  }

  // Express the real objective in the current nonbasic variables.
  d.z0 = 0;
  d.cost.assign(d.cols(), Rational(0));
  for (int k = 0; k < n; ++k) {
    const Rational& c = program.objective[k];
    if (c == 0) continue;
    if (const auto col = d.column_of(k)) {
      d.cost[*col] += c;
    } else {
      const int r = *d.row_of(k);
      d.z0 += c * d.constant[r];
      for (int j = 0; j < d.cols(); ++j) d.cost[j] += c * d.coef[r][j];
    }
  }

  if (!d.optimize()) {
    out.status = Status::kUnbounded;
    out.pivots = d.pivots;
    return out;
  }
  out.status = Status::kOptimal;
  out.objective = d.z0;
  out.values.assign(n, Rational(0));
  for (int i = 0; i < d.rows(); ++i) {
    if (d.basic[i] < n) out.values[d.basic[i]] = d.constant[i];
  }
  out.multipliers = constraint_multipliers(d, rows, n, program.constraints.size());
  out.pivots = d.pivots;
  return out;
}

}  // namespace unav::lp
