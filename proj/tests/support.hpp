#pragma once

// Independent brute-force helpers shared by the unit tests. Nothing here
// calls the library's search code; everything is computed from definitions.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "unavoidable/complex.hpp"
#include "unavoidable/set_partitions.hpp"

namespace unav::testing {

/// A random complex on [m]: 1..max_facets random facets of random density.
inline SimplicialComplex random_complex(std::mt19937_64& rng, int m, int max_facets = 6) {
  std::uniform_int_distribution<int> count(1, max_facets);
  std::uniform_int_distribution<int> density(10, 80);
  std::vector<Subset> facets;
  const int n = count(rng);
  const int p = density(rng);
  for (int i = 0; i < n; ++i) {
    Subset f;
    for (int v = 1; v <= m; ++v) {
      if (static_cast<int>(rng() % 100) < p) f = f.with(v);
    }
    facets.push_back(f);
  }
  return SimplicialComplex::from_facets(m, facets);
}

/// Face test straight from the facet list.
inline bool brute_is_face(const SimplicialComplex& k, Subset a) {
  return std::any_of(k.facets().begin(), k.facets().end(),
                     [&](Subset f) { return a.is_subset_of(f); });
}

/// Minimal non-faces by checking every subset and its one-element removals.
inline std::vector<Subset> brute_min_nonfaces(const SimplicialComplex& k) {
  std::vector<Subset> out;
  const int m = k.ground_size();
  for (Subset::Bits bits = 0; bits < (Subset::Bits{1} << m); ++bits) {
    const Subset a(bits);
    if (brute_is_face(k, a)) continue;
    bool minimal = true;
    for (int v : a.members()) minimal = minimal && brute_is_face(k, a.without(v));
    if (minimal) out.push_back(a);
  }
  canonicalize(out);
  return out;
}

/// Does some partition of [m] into exactly r blocks have at most s-1 face
/// blocks? (false ⇔ (r, s)-unavoidable). Literal enumeration.
inline bool brute_rs_violated(const SimplicialComplex& k, int r, int s) {
  bool violated = false;
  for_each_set_partition(k.ground_size(), r, [&](std::span<const Subset> blocks) {
    const auto faces = std::count_if(blocks.begin(), blocks.end(),
                                     [&](Subset b) { return brute_is_face(k, b); });
    if (faces < s) violated = true;
    return !violated;
  });
  return violated;
}

/// Number of faces including ∅, by enumeration.
inline std::uint64_t brute_face_count(const SimplicialComplex& k) {
  std::uint64_t n = 0;
  for (Subset::Bits bits = 0; bits < (Subset::Bits{1} << k.ground_size()); ++bits) {
    n += brute_is_face(k, Subset(bits)) ? 1 : 0;
  }
  return n;
}

}  // namespace unav::testing
