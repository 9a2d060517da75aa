#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "unavoidable/rational.hpp"
#include "unavoidable/subset.hpp"

namespace unav {

/// Largest ground set for operations that sweep all 2^m subsets.
inline constexpr int kMaxSweepGroundSize = 22;

/// An immutable simplicial complex K on the ground set [m], stored by its
/// facets together with the cached antichain of minimal non-faces.
///
/// The empty set is always a face; the void complex is not representable
/// (see alexander_dual, which reports it as std::nullopt). Vert(K) may be a
/// proper subset of [m].
class SimplicialComplex {
 public:
  /// Builds K from a facet list. Duplicates and non-maximal entries are
  /// dropped silently (dropped_facets() reports how many). The empty complex
  /// {∅} is given as the single facet ∅.
  ///
  /// Throws std::invalid_argument for m outside [1, 63], an empty facet list,
  /// or a vertex outside [m].
  static SimplicialComplex from_facets(int m, std::vector<Subset> facets);

  /// Builds K = {A ⊆ [m] : is_face(A)} by sweeping all subsets. `is_face` must
  /// be downward closed and accept ∅. Requires m <= kMaxSweepGroundSize.
  static SimplicialComplex from_face_predicate(int m, const std::function<bool(Subset)>& is_face);

  int ground_size() const { return m_; }
  /// Facets in canonical order.
  std::span<const Subset> facets() const { return facets_; }
  /// Minimal non-faces in canonical order; every member is nonempty.
  std::span<const Subset> min_nonfaces() const { return min_nonfaces_; }
  /// Number of redundant facet entries removed at construction.
  int dropped_facets() const { return dropped_facets_; }

  /// A ⊆ F for some facet F. Throws std::out_of_range if A ⊄ [m].
  bool contains_face(Subset a) const;
  /// A contains no minimal non-face. Agrees with contains_face on every input.
  bool contains_face_via_nonfaces(Subset a) const;

  /// K = 2^[m].
  bool is_full() const { return min_nonfaces_.empty(); }
  /// Vert(K): union of all facets.
  Subset vertices() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.m_ == b.m_ && a.facets_ == b.facets_;
  }

 private:
  SimplicialComplex() = default;
  void finish();

  int m_ = 0;
  std::vector<Subset> facets_;
  std::vector<Subset> min_nonfaces_;
  int dropped_facets_ = 0;
  // Bit i set iff subset with bits i is a face; kept for small ground sets.
  std::vector<std::uint64_t> face_table_;
};

/// Minimal non-faces by an ascending scan over the 2^m face table.
std::vector<Subset> min_nonfaces_by_scan(int m, std::span<const Subset> facets);
/// Minimal non-faces as the minimal transversals of the facet complements
/// (incremental hitting-set construction). Works for any m <= 63.
std::vector<Subset> min_nonfaces_by_transversals(int m, std::span<const Subset> facets);

/// The Alexander dual {A ⊆ [m] : [m]∖A ∉ K}; std::nullopt when the dual is
/// void, which happens exactly when K = 2^[m].
std::optional<SimplicialComplex> alexander_dual(const SimplicialComplex& k);

/// For every A ⊆ [m] exactly one of A, [m]∖A is a face. Checked as: facet
/// complements coincide with the minimal non-faces.
bool is_self_dual(const SimplicialComplex& k);

/// K1 ∗ K2 on [m1 + m2], the vertices of K2 relabelled to m1+1, ..., m1+m2.
SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2);

/// K with the single face F (a facet) removed; std::nullopt when that leaves
/// the void complex (K = {∅}). Throws std::invalid_argument if F is not a facet.
std::optional<SimplicialComplex> delete_facet(const SimplicialComplex& k, Subset facet);

/// K1 ∪ K2 on a common ground set.
SimplicialComplex complex_union(const SimplicialComplex& k1, const SimplicialComplex& k2);

/// Number of faces including ∅. Requires m <= kMaxSweepGroundSize.
std::uint64_t face_count(const SimplicialComplex& k);

/// A non-negative rational weight vector (α_1, ..., α_m) with positive total,
/// acting additively on subsets: μ(A) = Σ_{i∈A} α_i.
class Measure {
 public:
  /// Throws std::invalid_argument for an empty vector, a negative weight,
  /// a zero total or more than 63 weights.
  explicit Measure(std::vector<Rational> weights);

  /// Normalized counting measure on [m] supported by `support`.
  static Measure counting(int m, Subset support);
  static Measure uniform(int m) { return counting(m, Subset::range(m)); }

  int ground_size() const { return static_cast<int>(weights_.size()); }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& total() const { return total_; }
  bool is_probability() const { return total_ == 1; }
  Measure normalized() const;

  Rational operator()(Subset a) const;

  friend bool operator==(const Measure&, const Measure&) = default;

 private:
  std::vector<Rational> weights_;
  Rational total_;
};

/// K_{μ≤β} (or K_{μ<β} when strict). Exact; requires m <= kMaxSweepGroundSize
/// and β >= 0 (β > 0 when strict).
SimplicialComplex sublevel_complex(const Measure& mu, const Rational& beta, bool strict = false);

}  // namespace unav
