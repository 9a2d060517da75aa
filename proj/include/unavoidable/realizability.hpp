#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "unavoidable/complex.hpp"
#include "unavoidable/rational.hpp"

namespace unav {

/// Largest family accepted by the ν_ω sweeps.
inline constexpr std::size_t kMaxFamilySize = 4096;

/// A family F of nonempty subsets of [m] with non-negative weights ω.
/// It induces the superadditive measure
///   ν_ω(A) = max { ω(A_1) + ... + ω(A_k) : A_1 ⊎ ... ⊎ A_k ⊆ A, A_i ∈ F },
/// with ν_ω(A) = 0 when no such family exists.
class WeightedHypergraph {
 public:
  /// Throws std::invalid_argument on an empty or out-of-range member, a
  /// duplicate member, a negative weight or mismatched lengths.
  WeightedHypergraph(int m, std::vector<Subset> members, std::vector<Rational> omega);

  int ground_size() const { return m_; }
  const std::vector<Subset>& members() const { return members_; }
  const std::vector<Rational>& omega() const { return omega_; }

  friend bool operator==(const WeightedHypergraph&, const WeightedHypergraph&) = default;

 private:
  int m_;
  std::vector<Subset> members_;
  std::vector<Rational> omega_;
};

/// ν(A) = min_t μ_t(A) over finitely many additive measures on [m].
class GeometricMeasure {
 public:
  /// Throws std::invalid_argument for an empty list or mixed ground sets.
  explicit GeometricMeasure(std::vector<Measure> components);

  int ground_size() const { return components_.front().ground_size(); }
  const std::vector<Measure>& components() const { return components_; }

 private:
  std::vector<Measure> components_;
};

using SuperadditiveMeasure = std::variant<WeightedHypergraph, GeometricMeasure>;

/// ν_ω(A) by memoized recursion over the subsets of A.
Rational wh_measure(const WeightedHypergraph& family, Subset a);
/// min_t μ_t(A).
Rational geometric_measure(const GeometricMeasure& nu, Subset a);

int ground_size(const SuperadditiveMeasure& nu);
Rational evaluate(const SuperadditiveMeasure& nu, Subset a);

/// ν on every subset of [m], indexed by Subset::bits(). Requires
/// m <= kMaxSweepGroundSize (and |F| <= kMaxFamilySize for ν_ω).
std::vector<Rational> measure_table(const SuperadditiveMeasure& nu);

/// K_{ν ≤ α/r} with α = ν([m]); always r-unavoidable. Throws
/// std::invalid_argument when α = 0 or r < 2.
SimplicialComplex superadditive_sublevel(const SuperadditiveMeasure& nu, int r);

/// ⌈α/β⌉, the bound π(K_{ν≤β}) ≤ ⌈α/β⌉. Requires 0 < β <= α.
Integer pi_upper_bound(const Rational& alpha, const Rational& beta);

struct LpOptions {
  std::size_t max_constraints = 100000;
};

struct LpVerdict {
  bool feasible = false;
  /// Probability measure certifying feasibility; re-verified exactly.
  std::optional<Measure> witness;
  /// Optimal uniform slack ε* on the strict constraints. Absent when the
  /// non-strict constraints alone are already infeasible.
  std::optional<Rational> margin;
  /// Dual summary when not feasible.
  std::string infeasibility_note;
  std::size_t constraints = 0;
  int pivots = 0;
};

/// Is K = K_{μ≤1/r} for a probability measure μ? Solves
///   max ε  s.t.  Σα_i = 1, α ≥ 0, μ(F) ≤ 1/r on facets, μ(N) ≥ 1/r + ε on
///   minimal non-faces,
/// and answers yes iff ε* > 0. Complexes that are not r-unavoidable are
/// rejected without solving. Throws BudgetExceeded past options.max_constraints.
LpVerdict is_linearly_realizable(const SimplicialComplex& k, int r, const LpOptions& options = {});

/// Looks for a probability μ with μ(N) > 1/r on every minimal non-face, so
/// that K_{μ≤1/r} ⊆ K is a linearly realizable r-unavoidable subcomplex.
LpVerdict linear_subcomplex_witness(const SimplicialComplex& k, int r,
                                    const LpOptions& options = {});

/// K = K_{ν_ω ≤ α/r} with α = ν_ω([m]), checked on every subset of [m].
bool wh_realization_check(const SimplicialComplex& k, int r, const WeightedHypergraph& family);

/// F = 2^[m]∖{∅} with ω = 0 on faces and 1 on non-faces; realizes a
/// self-dual K at r = 2. Throws std::invalid_argument if K is not self-dual
/// or m > 12.
WeightedHypergraph selfdual_wh_realization(const SimplicialComplex& k);

/// Drops members of weight zero; ν_ω is unchanged.
WeightedHypergraph prune_zero_weights(const WeightedHypergraph& family);

}  // namespace unav
