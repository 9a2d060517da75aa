#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unavoidable/complex.hpp"
#include "unavoidable/partition.hpp"

namespace unav {

/// r = p^k with p prime and k >= 1.
struct PrimePower {
  std::int64_t p = 0;
  int k = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Decomposes r by trial division; std::nullopt when r is not a prime power
/// or r < 2. Throws std::invalid_argument for r > 2^32.
std::optional<PrimePower> prime_power(std::int64_t r);

enum class CertificateKind {
  kJoinNonembeddable,
  kSingleNonembeddable,
  kIndexJoinBound,
  kIndexProductBound,
};

enum class Verdict { kCertified, kNotCertified, kAbstained };

std::string to_string(CertificateKind kind);
std::string to_string(Verdict verdict);

/// Recomputed hypothesis data for one input complex.
struct FactorSummary {
  int m = 0;
  int pi = 0;
  /// (r, s)-unavoidability as checked by the packing engine.
  bool unavoidable = false;
  /// Offending partition when not unavoidable.
  std::optional<PartitionWitness> witness;
};

/// left <= right, evaluated over exact integers.
struct Inequality {
  std::int64_t left = 0;
  std::int64_t right = 0;
  std::string left_expression;
  std::string right_expression;
  bool holds() const { return left <= right; }
};

struct Certificate {
  CertificateKind kind = CertificateKind::kJoinNonembeddable;
  std::vector<FactorSummary> inputs;
  std::int64_t r = 0;
  std::optional<PrimePower> r_decomposition;
  /// Target dimension (non-embeddability certificates only).
  std::optional<int> d;
  /// Number of factors for joins; the surplus parameter for index bounds.
  int s = 1;
  std::optional<Inequality> inequality;
  /// r = 2 joins: the equivalent form d <= Σm_i - s - 2.
  std::optional<Inequality> schild_form;
  /// Index lower bound (index certificates, when certified).
  std::optional<std::int64_t> bound;
  Verdict verdict = Verdict::kAbstained;
  /// Every failed hypothesis, in check order. Empty when certified.
  std::vector<std::string> reasons;
  /// What a certified verdict asserts.
  std::string conclusion;
};

/// Index lower bound m - r + s - 1 for the r-fold deleted join (m - r when s
/// is absent), after checking that r is a prime power and K is (r, s)-
/// unavoidable. Abstains when a hypothesis fails.
Certificate index_bound_deleted_join(const SimplicialComplex& k, int r,
                                     std::optional<int> s = std::nullopt);

/// Index lower bound m - 2r + s for the r-fold deleted product (m - 2r + 1
/// when s is absent), same hypotheses.
Certificate index_bound_deleted_product(const SimplicialComplex& k, int r,
                                        std::optional<int> s = std::nullopt);

/// K_1 ∗ ... ∗ K_s admits no map to R^d without a global r-fold point when r
/// is a prime power, every factor is r-unavoidable and
/// (r-1)(d+s+1)+1 <= m_1 + ... + m_s. Requires d >= 0 and a nonempty list.
Certificate certify_join_nonembeddable(const std::vector<SimplicialComplex>& factors, int r, int d);

/// Every map K → R^d has r pairwise disjoint faces with intersecting images
/// when r is a prime power, K is r-unavoidable and m >= (r-1)(d+2)+1 (m the
/// ground-set size). Requires d >= 1.
Certificate certify_single_nonembeddable(const SimplicialComplex& k, int r, int d);

}  // namespace unav
