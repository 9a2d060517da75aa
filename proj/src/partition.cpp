#include "unavoidable/partition.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "unavoidable/set_partitions.hpp"

namespace unav {

namespace {

void require_r(int r) {
  if (r < 2) throw std::invalid_argument("r must be at least 2, got " + std::to_string(r));
}

/// Branch-and-bound over a fixed list of nonempty candidate sets.
/// Branches on the lowest still-available vertex: either some candidate
/// through it is packed, or the vertex stays uncovered.
class PackingSearch {
 public:
  explicit PackingSearch(std::span<const Subset> candidates) {
    min_size_ = std::numeric_limits<int>::max();
    // When v is the lowest available vertex, a usable candidate through v
    // has v as its own lowest member, so indexing by lowest member suffices.
    for (Subset c : candidates) {
      through_[c.lowest()].push_back(c);
      min_size_ = std::min(min_size_, c.size());
    }
    empty_ = candidates.empty();
  }

  /// Largest packing inside `avail`, stopping early once `target` is reached.
  int max_size(Subset avail, int target = std::numeric_limits<int>::max()) {
    if (empty_) return 0;
    best_ = 0;
    target_ = target;
    maximize(avail, 0);
    return best_;
  }

  /// Is there a packing of exactly `need` sets inside `avail` whose sizes
  /// sum to at most `cap`?
  bool exists(Subset avail, int need, int cap) {
    if (need <= 0) return cap >= 0;
    if (empty_) return false;
    return find(avail, need, cap);
  }

 private:
  void maximize(Subset avail, int count) {
    if (count > best_) best_ = count;
    if (best_ >= target_ || avail.empty()) return;
    if (count + avail.size() / min_size_ <= best_) return;
    const int v = avail.lowest();
    for (Subset c : through_[v]) {
      if (!c.is_subset_of(avail)) continue;
      maximize(avail - c, count + 1);
      if (best_ >= target_) return;
    }
    maximize(avail.without(v), count);
  }

  bool find(Subset avail, int need, int cap) {
    if (need == 0) return true;
    if (need * min_size_ > cap || need * min_size_ > avail.size()) return false;
    const int v = avail.lowest();
    for (Subset c : through_[v]) {
      if (c.size() > cap || !c.is_subset_of(avail)) continue;
      if (find(avail - c, need - 1, cap - c.size())) return true;
    }
    return find(avail.without(v), need, cap);
  }

  std::vector<Subset> through_[kMaxGroundSize + 1];
  int min_size_ = 1;
  bool empty_ = true;
  int best_ = 0;
  int target_ = 0;
};

/// Lexicographically least sequence c_1 < ... < c_need (canonical order) of
/// pairwise disjoint candidates inside `avail` with total size <= cap.
/// The caller guarantees one exists.
std::vector<Subset> least_packing(std::span<const Subset> candidates, Subset avail, int need,
                                  int cap) {
  std::vector<Subset> chosen;
  std::size_t start = 0;
  while (static_cast<int>(chosen.size()) < need) {
    bool picked = false;
    for (std::size_t i = start; i < candidates.size(); ++i) {
      const Subset c = candidates[i];
      if (c.size() > cap || !c.is_subset_of(avail)) continue;
      const int rest = need - static_cast<int>(chosen.size()) - 1;
      PackingSearch tail(candidates.subspan(i + 1));
      if (!tail.exists(avail - c, rest, cap - c.size())) continue;
      chosen.push_back(c);
      avail = avail - c;
      cap -= c.size();
      start = i + 1;
      picked = true;
      break;
    }
    if (!picked) throw std::logic_error("least_packing: no packing of the promised size");
  }
  return chosen;
}

/// Turns `need` disjoint non-faces into a partition of [m] into
/// need + extra blocks: the first `extra` - 1 uncovered vertices become
/// singletons, the remaining uncovered vertices form one more block, or are
/// merged into the first non-face when extra == 0.
PartitionWitness witness_from_packing(const SimplicialComplex& k, std::vector<Subset> packed,
                                      int extra) {
  Subset leftover = Subset::range(k.ground_size());
  for (Subset n : packed) leftover = leftover - n;
  std::vector<Subset> blocks = std::move(packed);
  if (extra == 0) {
    if (!leftover.empty()) blocks.front() = blocks.front() | leftover;
  } else {
    for (int i = 0; i + 1 < extra; ++i) {
      const int v = leftover.lowest();
      blocks.push_back(Subset::singleton(v));
      leftover = leftover.without(v);
    }
    blocks.push_back(leftover);
  }
  return make_partition_witness(k, std::move(blocks));
}

}  // namespace

PartitionWitness make_partition_witness(const SimplicialComplex& k, std::vector<Subset> blocks) {
  PartitionWitness w;
  w.offending.reserve(blocks.size());
  for (Subset b : blocks) w.offending.push_back(!k.contains_face(b));
  w.blocks = std::move(blocks);
  return w;
}

MaxPacking max_disjoint_min_nonfaces(const SimplicialComplex& k) {
  const auto candidates = k.min_nonfaces();
  const Subset ground = Subset::range(k.ground_size());
  PackingSearch search(candidates);
  MaxPacking out;
  out.size = search.max_size(ground);
  out.witness.nonfaces = least_packing(candidates, ground, out.size, k.ground_size());
  out.witness.leftover = ground;
  for (Subset n : out.witness.nonfaces) out.witness.leftover = out.witness.leftover - n;
  return out;
}

int partition_number(const SimplicialComplex& k) {
  PackingSearch search(k.min_nonfaces());
  return search.max_size(Subset::range(k.ground_size())) + 1;
}

int partition_number_oracle(const SimplicialComplex& k) {
  const int m = k.ground_size();
  if (m > kMaxOracleGroundSize) {
    throw std::invalid_argument("partition_number_oracle refuses m = " + std::to_string(m) +
                                " (limit " + std::to_string(kMaxOracleGroundSize) + ")");
  }
  std::vector<bool> avoidable(m + 1, false);
  for_each_set_partition(m, [&](std::span<const Subset> blocks) {
    const bool all_nonfaces =
        std::none_of(blocks.begin(), blocks.end(), [&](Subset b) { return k.contains_face(b); });
    if (all_nonfaces) avoidable[blocks.size()] = true;
    return true;
  });
  for (int nu = 1; nu <= m; ++nu) {
    if (!avoidable[nu]) return nu;
  }
  return m + 1;
}

UnavoidabilityVerdict is_r_unavoidable(const SimplicialComplex& k, int r) {
  require_r(r);
  return is_rs_unavoidable(k, r, 1);
}

UnavoidabilityVerdict is_rs_unavoidable(const SimplicialComplex& k, int r, int s) {
  require_r(r);
  if (s < 1 || s >= r) {
    throw std::invalid_argument("need r > s >= 1, got r = " + std::to_string(r) +
                                ", s = " + std::to_string(s));
  }
  const int m = k.ground_size();
  const int need = r - s + 1;
  const int cap = m - (s - 1);
  const auto candidates = k.min_nonfaces();
  const Subset ground = Subset::range(m);
  PackingSearch search(candidates);
  if (!search.exists(ground, need, cap)) return {true, std::nullopt};
  auto packed = least_packing(candidates, ground, need, cap);
  return {false, witness_from_packing(k, std::move(packed), s - 1)};
}

bool is_minimally_r_unavoidable(const SimplicialComplex& k, int r) {
  if (!is_r_unavoidable(k, r).unavoidable) return false;
  for (Subset f : k.facets()) {
    const auto smaller = delete_facet(k, f);
    if (smaller && is_r_unavoidable(*smaller, r).unavoidable) return false;
  }
  return true;
}

HypergraphPartitionNumber hypergraph_partition_number(const SimplicialComplex& k,
                                                      std::span<const Subset> hypergraph) {
  const int m = k.ground_size();
  if (m > kMaxOracleGroundSize) {
    throw std::invalid_argument("hypergraph_partition_number refuses m = " + std::to_string(m) +
                                " (limit " + std::to_string(kMaxOracleGroundSize) + ")");
  }
  if (hypergraph.empty()) throw std::invalid_argument("hypergraph H must be nonempty");
  std::vector<bool> in_h(std::size_t{1} << m, false);
  for (Subset h : hypergraph) {
    if (h.empty() || !h.is_subset_of(Subset::range(m))) {
      throw std::invalid_argument("hypergraph member " + h.to_string() +
                                  " must be a nonempty subset of [m]");
    }
    in_h[h.bits()] = true;
  }

  std::vector<bool> exists(m + 2, false);
  std::vector<bool> violated(m + 2, false);
  for_each_set_partition(m, [&](std::span<const Subset> blocks) {
    if (!std::all_of(blocks.begin(), blocks.end(), [&](Subset b) { return in_h[b.bits()]; })) {
      return true;
    }
    exists[blocks.size()] = true;
    if (std::none_of(blocks.begin(), blocks.end(), [&](Subset b) { return k.contains_face(b); })) {
      violated[blocks.size()] = true;
    }
    return true;
  });

  HypergraphPartitionNumber out;
  int last_violated = 0;
  out.first_satisfied_level = m + 1;
  for (int nu = m; nu >= 1; --nu) {
    if (violated[nu] && last_violated == 0) last_violated = nu;
    if (!violated[nu]) out.first_satisfied_level = nu;
  }
  out.nu = last_violated + 1;
  for (int nu = 1; nu <= m; ++nu) {
    if (!exists[nu]) out.vacuous_levels.push_back(nu);
  }
  return out;
}

}  // namespace unav
