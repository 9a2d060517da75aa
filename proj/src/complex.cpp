#include "unavoidable/complex.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace unav {

namespace {

// Face tables are retained for O(1) membership when 2^m bits stay small.
constexpr int kFaceTableGroundSize = 16;

void check_ground_size(int m) {
  if (m < 1 || m > kMaxGroundSize) {
    throw std::invalid_argument("ground set size " + std::to_string(m) + " outside [1, 63]");
  }
}

void check_sweep_size(int m, const char* what) {
  if (m > kMaxSweepGroundSize) {
    throw std::invalid_argument(std::string(what) + ": ground set size " + std::to_string(m) +
                                " exceeds the subset-sweep limit of " +
                                std::to_string(kMaxSweepGroundSize));
  }
}

/// Removes duplicates and non-maximal members, leaving a canonical antichain.
std::vector<Subset> maximal_elements(std::vector<Subset> sets) {
  std::sort(sets.begin(), sets.end(), [](Subset a, Subset b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.bits() < b.bits();
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Subset> kept;
  for (Subset s : sets) {
    const bool covered =
        std::any_of(kept.begin(), kept.end(), [s](Subset f) { return s.is_subset_of(f); });
    if (!covered) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), CanonicalLess{});
  return kept;
}

/// Removes duplicates and non-minimal members.
std::vector<Subset> minimal_elements(std::vector<Subset> sets) {
  std::sort(sets.begin(), sets.end(), [](Subset a, Subset b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Subset> kept;
  for (Subset s : sets) {
    const bool covers =
        std::any_of(kept.begin(), kept.end(), [s](Subset f) { return f.is_subset_of(s); });
    if (!covers) kept.push_back(s);
  }
  return kept;
}

std::vector<std::uint64_t> build_face_table(int m, std::span<const Subset> facets) {
  const std::uint64_t count = std::uint64_t{1} << m;
  std::vector<std::uint64_t> table((count + 63) / 64, 0);
  auto set = [&](std::uint64_t a) { table[a >> 6] |= std::uint64_t{1} << (a & 63); };
  auto get = [&](std::uint64_t a) { return (table[a >> 6] >> (a & 63)) & 1U; };
  for (Subset f : facets) set(f.bits());
  // Push face marks downward one coordinate at a time.
  for (int i = 0; i < m; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t a = 0; a < count; ++a) {
      if ((a & bit) && get(a)) set(a ^ bit);
    }
  }
  return table;
}

bool table_lookup(const std::vector<std::uint64_t>& table, Subset a) {
  return (table[a.bits() >> 6] >> (a.bits() & 63)) & 1U;
}

}  // namespace

// ---------------------------------------------------------------------------
// Minimal non-faces

std::vector<Subset> min_nonfaces_by_scan(int m, std::span<const Subset> facets) {
  check_sweep_size(m, "min_nonfaces_by_scan");
  const auto table = build_face_table(m, facets);
  std::vector<Subset> out;
  const std::uint64_t count = std::uint64_t{1} << m;
  for (std::uint64_t a = 1; a < count; ++a) {
    const Subset s(a);
    if (table_lookup(table, s)) continue;
    bool minimal = true;
    for (std::uint64_t b = a; b != 0 && minimal; b &= b - 1) {
      minimal = table_lookup(table, Subset(a & ~(b & (~b + 1))));
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<Subset> min_nonfaces_by_transversals(int m, std::span<const Subset> facets) {
  // A is a non-face iff A meets [m]∖F for every facet F.
  std::vector<Subset> edges;
  edges.reserve(facets.size());
  for (Subset f : facets) edges.push_back(f.complement(m));
  if (std::any_of(edges.begin(), edges.end(), [](Subset e) { return e.empty(); })) return {};
  std::sort(edges.begin(), edges.end(), [](Subset a, Subset b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  });

  std::vector<Subset> transversals{Subset{}};
  for (Subset e : edges) {
    std::vector<Subset> next;
    for (Subset t : transversals) {
      if (t.intersects(e)) {
        next.push_back(t);
        continue;
      }
      for (int v : e.members()) next.push_back(t.with(v));
    }
    transversals = minimal_elements(std::move(next));
  }
  std::sort(transversals.begin(), transversals.end(), CanonicalLess{});
  return transversals;
}

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex SimplicialComplex::from_facets(int m, std::vector<Subset> facets) {
  check_ground_size(m);
  if (facets.empty()) {
    throw std::invalid_argument("empty facet list (the void complex is not a valid input)");
  }
  const Subset ground = Subset::range(m);
  for (Subset f : facets) {
    if (!f.is_subset_of(ground)) {
      throw std::invalid_argument("facet " + f.to_string() + " has a vertex outside [" +
                                  std::to_string(m) + "]");
    }
  }
  SimplicialComplex k;
  k.m_ = m;
  const auto given = facets.size();
  k.facets_ = maximal_elements(std::move(facets));
  k.dropped_facets_ = static_cast<int>(given - k.facets_.size());
  k.finish();
  return k;
}

void SimplicialComplex::finish() {
  if (m_ <= kMaxSweepGroundSize) {
    min_nonfaces_ = min_nonfaces_by_scan(m_, facets_);
  } else {
    min_nonfaces_ = min_nonfaces_by_transversals(m_, facets_);
  }
  if (m_ <= kFaceTableGroundSize) face_table_ = build_face_table(m_, facets_);
}

SimplicialComplex SimplicialComplex::from_face_predicate(
    int m, const std::function<bool(Subset)>& is_face) {
  check_ground_size(m);
  check_sweep_size(m, "from_face_predicate");
  if (!is_face(Subset{})) {
    throw std::invalid_argument("face predicate rejects the empty set (void complex)");
  }
  // Depth-first over the down-set: only faces and their one-vertex
  // extensions are ever evaluated.
  std::vector<Subset> facets;
  auto visit = [&](auto&& self, Subset face, int next) -> void {
    bool maximal = true;
    for (int v = 1; v <= m; ++v) {
      if (face.contains(v)) continue;
      const Subset bigger = face.with(v);
      if (!is_face(bigger)) continue;
      maximal = false;
      if (v >= next) self(self, bigger, v + 1);
    }
    if (maximal) facets.push_back(face);
  };
  visit(visit, Subset{}, 1);
  return from_facets(m, std::move(facets));
}

bool SimplicialComplex::contains_face(Subset a) const {
  if (!a.is_subset_of(Subset::range(m_))) {
    throw std::out_of_range("subset " + a.to_string() + " not contained in [" +
                            std::to_string(m_) + "]");
  }
  if (!face_table_.empty()) return table_lookup(face_table_, a);
  return std::any_of(facets_.begin(), facets_.end(), [a](Subset f) { return a.is_subset_of(f); });
}

bool SimplicialComplex::contains_face_via_nonfaces(Subset a) const {
  if (!a.is_subset_of(Subset::range(m_))) {
    throw std::out_of_range("subset " + a.to_string() + " not contained in [" +
                            std::to_string(m_) + "]");
  }
  return std::none_of(min_nonfaces_.begin(), min_nonfaces_.end(),
                      [a](Subset n) { return n.is_subset_of(a); });
}

Subset SimplicialComplex::vertices() const {
  Subset out;
  for (Subset f : facets_) out = out | f;
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

std::optional<SimplicialComplex> alexander_dual(const SimplicialComplex& k) {
  if (k.is_full()) return std::nullopt;
  const int m = k.ground_size();
  // A ∈ K^∨ ⇔ [m]∖A contains a minimal non-face N ⇔ A ⊆ [m]∖N.
  std::vector<Subset> facets;
  for (Subset n : k.min_nonfaces()) facets.push_back(n.complement(m));
  return SimplicialComplex::from_facets(m, std::move(facets));
}

bool is_self_dual(const SimplicialComplex& k) {
  if (k.facets().size() != k.min_nonfaces().size()) return false;
  std::vector<Subset> complements;
  for (Subset f : k.facets()) complements.push_back(f.complement(k.ground_size()));
  std::sort(complements.begin(), complements.end(), CanonicalLess{});
  return std::equal(complements.begin(), complements.end(), k.min_nonfaces().begin());
}

SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2) {
  const int m1 = k1.ground_size();
  const int m = m1 + k2.ground_size();
  if (m > kMaxGroundSize) {
    throw std::invalid_argument("join has " + std::to_string(m) + " vertices; limit is 63");
  }
  std::vector<Subset> facets;
  facets.reserve(k1.facets().size() * k2.facets().size());
  for (Subset f1 : k1.facets()) {
    for (Subset f2 : k2.facets()) facets.push_back(f1 | f2.shifted(m1));
  }
  return SimplicialComplex::from_facets(m, std::move(facets));
}

std::optional<SimplicialComplex> delete_facet(const SimplicialComplex& k, Subset facet) {
  const auto facets = k.facets();
  if (std::find(facets.begin(), facets.end(), facet) == facets.end()) {
    throw std::invalid_argument(facet.to_string() + " is not a facet");
  }
  if (facet.empty()) return std::nullopt;
  std::vector<Subset> next;
  for (Subset f : facets) {
    if (f != facet) next.push_back(f);
  }
  for (int v : facet.members()) next.push_back(facet.without(v));
  return SimplicialComplex::from_facets(k.ground_size(), std::move(next));
}

SimplicialComplex complex_union(const SimplicialComplex& k1, const SimplicialComplex& k2) {
  if (k1.ground_size() != k2.ground_size()) {
    throw std::invalid_argument("complex_union: ground sets differ");
  }
  std::vector<Subset> facets(k1.facets().begin(), k1.facets().end());
  facets.insert(facets.end(), k2.facets().begin(), k2.facets().end());
  return SimplicialComplex::from_facets(k1.ground_size(), std::move(facets));
}

std::uint64_t face_count(const SimplicialComplex& k) {
  check_sweep_size(k.ground_size(), "face_count");
  std::uint64_t count = 0;
  const std::uint64_t n = std::uint64_t{1} << k.ground_size();
  for (std::uint64_t a = 0; a < n; ++a) count += k.contains_face(Subset(a)) ? 1 : 0;
  return count;
}

// ---------------------------------------------------------------------------
// Measures

Measure::Measure(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.empty() || weights_.size() > static_cast<std::size_t>(kMaxGroundSize)) {
    throw std::invalid_argument("measure needs between 1 and 63 weights");
  }
  for (const auto& w : weights_) {
    if (w < 0) throw std::invalid_argument("negative weight " + to_string(w));
    total_ += w;
  }
  if (total_ <= 0) throw std::invalid_argument("measure has zero total mass");
}

Measure Measure::counting(int m, Subset support) {
  check_ground_size(m);
  if (support.empty() || !support.is_subset_of(Subset::range(m))) {
    throw std::invalid_argument("counting measure support must be a nonempty subset of [m]");
  }
  const Rational share(1, support.size());
  std::vector<Rational> w(m);
  for (int v : support.members()) w[v - 1] = share;
  return Measure(std::move(w));
}

Measure Measure::normalized() const {
  std::vector<Rational> w = weights_;
  for (auto& x : w) x /= total_;
  return Measure(std::move(w));
}

Rational Measure::operator()(Subset a) const {
  Rational sum;
  for (int v : a.members()) {
    if (v > ground_size()) throw std::out_of_range("subset outside the measure's ground set");
    sum += weights_[v - 1];
  }
  return sum;
}

namespace {

/// μ and β rescaled to a common integer denominator so sub-level tests run
/// on machine integers when nothing overflows.
struct ScaledThreshold {
  std::vector<std::int64_t> weights;
  std::int64_t threshold = 0;
};

std::optional<ScaledThreshold> scale_to_int64(const Measure& mu, const Rational& beta) {
  Integer lcm = boost::multiprecision::denominator(beta);
  for (const auto& w : mu.weights()) {
    lcm = boost::multiprecision::lcm(lcm, Integer(boost::multiprecision::denominator(w)));
  }
  const Integer limit(std::numeric_limits<std::int64_t>::max() / 2);
  ScaledThreshold out;
  Integer sum = 0;
  for (const auto& w : mu.weights()) {
    const Integer scaled =
        boost::multiprecision::numerator(w) * (lcm / boost::multiprecision::denominator(w));
    sum += scaled;
    if (sum > limit) return std::nullopt;
    out.weights.push_back(scaled.convert_to<std::int64_t>());
  }
  const Integer t =
      boost::multiprecision::numerator(beta) * (lcm / boost::multiprecision::denominator(beta));
  out.threshold =
      t > limit ? std::numeric_limits<std::int64_t>::max() / 2 : t.convert_to<std::int64_t>();
  return out;
}

}  // namespace

SimplicialComplex sublevel_complex(const Measure& mu, const Rational& beta, bool strict) {
  if (beta < 0) throw std::invalid_argument("sub-level threshold must be non-negative");
  if (strict && beta == 0) throw std::invalid_argument("K_{mu<0} is the void complex");
  const int m = mu.ground_size();
  if (auto scaled = scale_to_int64(mu, beta)) {
    const auto& s = *scaled;
    return SimplicialComplex::from_face_predicate(m, [&s, strict](Subset a) {
      std::int64_t sum = 0;
      for (int v : a.members()) sum += s.weights[v - 1];
      return strict ? sum < s.threshold : sum <= s.threshold;
    });
  }
  return SimplicialComplex::from_face_predicate(m, [&mu, &beta, strict](Subset a) {
    const Rational value = mu(a);
    return strict ? value < beta : value <= beta;
  });
}

}  // namespace unav
