#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unavoidable/complex.hpp"

namespace unav {

/// Edges of K_n in lexicographic order: (1,2), (1,3), ..., (1,n), (2,3), ...
/// Edge number e (1-based) is vertex e of a Ramsey complex.
using EdgeTable = std::vector<std::pair<int, int>>;

EdgeTable complete_graph_edges(int n);
/// 1-based position of edge {i, j} (i < j) in complete_graph_edges(n).
int edge_index(int n, int i, int j);

/// A graph property on spanning subgraphs of K_n, given as edge subsets over
/// the lexicographic edge numbering. Must be monotone: adding edges never
/// destroys it.
class GraphProperty {
 public:
  using Predicate = std::function<bool(int n, Subset edges)>;

  /// "Γ contains a complete subgraph on k vertices". Requires k >= 1.
  static GraphProperty contains_clique(int k);
  /// A user predicate; monotonicity is the caller's responsibility.
  static GraphProperty custom(std::string name, Predicate predicate);

  bool operator()(int n, Subset edges) const;
  const std::string& name() const { return name_; }
  /// k for contains_clique(k), empty for custom properties.
  std::optional<int> clique_size() const { return clique_size_; }

 private:
  GraphProperty() = default;
  std::string name_;
  std::optional<int> clique_size_;
  Predicate predicate_;
};

/// Does the graph on [n] with the given edges contain a k-clique?
bool has_clique(int n, Subset edges, int k);

/// Draws `trials` random graphs Γ on [n], adds one random missing edge and
/// checks P(Γ) ⇒ P(Γ + e). Returns the first violating pair if any.
std::optional<std::pair<Subset, Subset>> find_monotonicity_violation(const GraphProperty& p, int n,
                                                                     int trials,
                                                                     std::uint64_t seed);

/// All subsets of [m] of size <= k+1. Requires 0 <= k <= m-1.
SimplicialComplex skeleton(int k, int m);
/// The m isolated vertices, skeleton(0, m).
SimplicialComplex points(int m);

struct RamseyComplex {
  SimplicialComplex complex;
  EdgeTable edges;
};

/// L on the edge set E of K_n: S ∈ L iff E∖S has property P. For clique
/// properties the facets are E minus the edges of one k-clique; custom
/// properties are swept over all 2^|E| edge sets (|E| <= 22). Requires n >= 3
/// and |E| <= 63; throws std::invalid_argument if no edge set has P.
RamseyComplex ramsey_complex(int n, const GraphProperty& p);

struct ScanOptions {
  std::uint64_t budget = std::uint64_t{1} << 26;
  unsigned threads = 1;
};

struct AdmissibilityResult {
  bool admissible = false;
  /// Colour (0-based) of each edge in the lexicographically first coloring
  /// (read as a base-r number, edge 1 least significant) with no colour
  /// class whose complement has P. Present exactly when not admissible.
  std::optional<std::vector<int>> counterexample;
};

/// (P, r)-admissibility by scanning all r-colorings of the edges of K_n: every
/// coloring must leave a colour i with P(E∖A_i). Colorings with an empty
/// class are skipped unless allow_empty_classes. Throws BudgetExceeded when
/// r^|E| > options.budget.
AdmissibilityResult is_admissible(int n, const GraphProperty& p, int r,
                                  bool allow_empty_classes = true,
                                  const ScanOptions& options = {});

/// {A ⊆ [m] : 2·w(A) < W} for positive integer weights with total W.
/// Self-dual whenever W is odd. Requires m <= kMaxSweepGroundSize.
SimplicialComplex weighted_majority_complex(const std::vector<std::int64_t>& weights);

/// Positive weights w_i in [1, 2m] with odd total, from a seeded mt19937_64.
std::vector<std::int64_t> random_odd_weights(int m, std::uint64_t seed);

/// weighted_majority_complex(random_odd_weights(m, seed)); always self-dual.
SimplicialComplex random_selfdual(int m, std::uint64_t seed);

struct DeletedJoinOptions {
  std::uint64_t budget = std::uint64_t{1} << 30;
  unsigned threads = 1;
};

/// f-vector of the r-fold deleted join: f[d] counts the nonempty faces of
/// dimension d (d + 1 labelled vertices), d = 0..m-1. A face is a labelling
/// [m] → {0, 1, ..., r} whose classes 1..r are faces of K. Throws
/// BudgetExceeded when (r+1)^m > options.budget.
std::vector<std::uint64_t> deleted_join_faces(const SimplicialComplex& k, int r,
                                              const DeletedJoinOptions& options = {});

}  // namespace unav
