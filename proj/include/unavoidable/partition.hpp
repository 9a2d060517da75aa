#pragma once

#include <optional>
#include <span>
#include <vector>

#include "unavoidable/complex.hpp"

namespace unav {

/// Largest ground set accepted by the exhaustive set-partition routines.
inline constexpr int kMaxOracleGroundSize = 12;

/// A partition of [m] into nonempty blocks; offending[i] is true when
/// blocks[i] is a non-face of the complex it was built for.
struct PartitionWitness {
  std::vector<Subset> blocks;
  std::vector<bool> offending;

  friend bool operator==(const PartitionWitness&, const PartitionWitness&) = default;
};

/// Pairwise disjoint minimal non-faces and the vertices they leave uncovered.
struct PackingWitness {
  std::vector<Subset> nonfaces;
  Subset leftover;

  friend bool operator==(const PackingWitness&, const PackingWitness&) = default;
};

struct MaxPacking {
  int size = 0;  // D
  PackingWitness witness;
};

/// Largest family of pairwise disjoint minimal non-faces. The witness is the
/// lexicographically least maximum family (members in canonical order,
/// families compared as sequences), so repeated runs agree bit for bit.
/// size == 0 exactly when K = 2^[m].
MaxPacking max_disjoint_min_nonfaces(const SimplicialComplex& k);

/// π(K): the least ν such that every partition of [m] into ν nonempty blocks
/// has a block in K. Computed as max_disjoint_min_nonfaces(K).size + 1, so
/// the value m + 1 means no ν ≤ m works (only for K = {∅}).
int partition_number(const SimplicialComplex& k);

/// π(K) straight from the definition: scans every set partition of [m].
/// Throws std::invalid_argument for m > kMaxOracleGroundSize.
int partition_number_oracle(const SimplicialComplex& k);

struct UnavoidabilityVerdict {
  bool unavoidable = false;
  /// Present exactly when unavoidable is false.
  std::optional<PartitionWitness> witness;
};

/// Every partition of [m] into r nonempty blocks has a block in K.
/// When false, the witness is r disjoint minimal non-faces with the
/// uncovered vertices merged into the first one. Requires r >= 2.
UnavoidabilityVerdict is_r_unavoidable(const SimplicialComplex& k, int r);

/// Every partition of [m] into r nonempty blocks has at least s blocks in K.
/// Decided by looking for r-s+1 disjoint minimal non-faces that leave at
/// least s-1 vertices uncovered. Requires r > s >= 1.
UnavoidabilityVerdict is_rs_unavoidable(const SimplicialComplex& k, int r, int s);

/// K is r-unavoidable and no proper subcomplex is. Checked facet by facet:
/// removing any single facet must destroy r-unavoidability. The void complex
/// is not counted as a subcomplex.
bool is_minimally_r_unavoidable(const SimplicialComplex& k, int r);

struct HypergraphPartitionNumber {
  /// Least ν such that at every level ν' >= ν each H-partition into ν'
  /// blocks has a block in K (levels without H-partitions count as
  /// satisfied). Always in [1, m + 1].
  int nu = 1;
  /// Levels in [1, m] at which [m] has no partition into blocks from H.
  std::vector<int> vacuous_levels;
  /// Least level satisfied at all, vacuously or not; can sit below nu because
  /// the condition is not monotone once H restricts the blocks.
  int first_satisfied_level = 1;
};

/// π_H(K) by brute force over set partitions. H must be nonempty with
/// nonempty members inside [m]; m <= kMaxOracleGroundSize.
HypergraphPartitionNumber hypergraph_partition_number(const SimplicialComplex& k,
                                                      std::span<const Subset> hypergraph);

/// Builds the witness record for an explicit block list.
PartitionWitness make_partition_witness(const SimplicialComplex& k, std::vector<Subset> blocks);

}  // namespace unav
