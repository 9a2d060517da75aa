#include "unavoidable/generators.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "parallel.hpp"
#include "unavoidable/errors.hpp"

namespace unav {

namespace {

constexpr std::uint64_t kMaxSkeletonFacets = std::uint64_t{1} << 24;

/// base^exponent, or nullopt once it passes `limit`.
std::optional<std::uint64_t> bounded_power(std::uint64_t base, int exponent, std::uint64_t limit) {
  std::uint64_t value = 1;
  for (int i = 0; i < exponent; ++i) {
    if (value > limit / base) return std::nullopt;
    value *= base;
  }
  return value <= limit ? std::optional(value) : std::nullopt;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t value = 1;
  for (int i = 1; i <= std::min(k, n - k); ++i) {
    value = value * static_cast<std::uint64_t>(n - i + 1) / static_cast<std::uint64_t>(i);
    if (value > kMaxSkeletonFacets) return value;
  }
  return value;
}

/// Calls fn on every k-subset of [n] in increasing numeric order of bits.
template <typename Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k == 0) {
    fn(Subset{});
    return;
  }
  if (k > n) return;
  Subset::Bits x = (Subset::Bits{1} << k) - 1;
  const Subset::Bits limit = n == 64 ? 0 : Subset::Bits{1} << n;
  while (true) {
    fn(Subset(x));
    // Gosper's hack: next integer with the same popcount.
    const Subset::Bits c = x & (~x + 1);
    const Subset::Bits r = x + c;
    if (r == 0) return;
    x = (((r ^ x) >> 2) / c) | r;
    if (x >= limit) return;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Graphs

EdgeTable complete_graph_edges(int n) {
  EdgeTable edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  }
  return edges;
}

int edge_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n || i == j) throw std::invalid_argument("not an edge of K_n");
  // Edges starting at 1..i-1 come first: (n-1) + (n-2) + ... + (n-i+1).
  return (i - 1) * n - (i - 1) * i / 2 + (j - i);
}

bool has_clique(int n, Subset edges, int k) {
  if (k <= 1) return k <= n;
  std::array<std::uint32_t, 12> adjacency{};
  int e = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      ++e;
      if (edges.contains(e)) {
        adjacency[i] |= 1U << j;
        adjacency[j] |= 1U << i;
      }
    }
  }
  // Grow cliques in increasing vertex order.
  auto extend = [&](auto&& self, std::uint32_t candidates, int size) -> bool {
    if (size == k) return true;
    while (candidates != 0) {
      if (std::popcount(candidates) < k - size) return false;
      const int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      if (self(self, candidates & adjacency[v], size + 1)) return true;
    }
    return false;
  };
  return extend(extend, n >= 32 ? ~0U : (1U << n) - 1, 0);
}

GraphProperty GraphProperty::contains_clique(int k) {
  if (k < 1) throw std::invalid_argument("clique size must be at least 1");
  GraphProperty p;
  p.name_ = "contains_clique(" + std::to_string(k) + ")";
  p.clique_size_ = k;
  p.predicate_ = [k](int n, Subset edges) { return has_clique(n, edges, k); };
  return p;
}

GraphProperty GraphProperty::custom(std::string name, Predicate predicate) {
  GraphProperty p;
  p.name_ = std::move(name);
  p.predicate_ = std::move(predicate);
  return p;
}

bool GraphProperty::operator()(int n, Subset edges) const { return predicate_(n, edges); }

std::optional<std::pair<Subset, Subset>> find_monotonicity_violation(const GraphProperty& p, int n,
                                                                     int trials,
                                                                     std::uint64_t seed) {
  const int edge_count = n * (n - 1) / 2;
  if (edge_count > kMaxGroundSize) throw std::invalid_argument("K_n has more than 63 edges");
  const Subset all = Subset::range(edge_count);
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Subset graph = Subset(rng()) & all;
    const Subset missing = all - graph;
    if (missing.empty()) continue;
    auto pick = static_cast<int>(rng() % static_cast<std::uint64_t>(missing.size()));
    Subset rest = missing;
    while (pick-- > 0) rest = rest.without(rest.lowest());
    const Subset bigger = graph.with(rest.lowest());
    if (p(n, graph) && !p(n, bigger)) return std::pair(graph, bigger);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Families of complexes

SimplicialComplex skeleton(int k, int m) {
  if (m < 1 || m > kMaxGroundSize) throw std::invalid_argument("m outside [1, 63]");
  if (k < 0 || k > m - 1) {
    throw std::invalid_argument("skeleton dimension " + std::to_string(k) + " outside [0, m-1]");
  }
  if (binomial(m, k + 1) > kMaxSkeletonFacets) {
    throw std::invalid_argument("skeleton would have more than 2^24 facets");
  }
  std::vector<Subset> facets;
  for_each_k_subset(m, k + 1, [&](Subset s) { facets.push_back(s); });
  return SimplicialComplex::from_facets(m, std::move(facets));
}

SimplicialComplex points(int m) { return skeleton(0, m); }

RamseyComplex ramsey_complex(int n, const GraphProperty& p) {
  if (n < 3) throw std::invalid_argument("Ramsey complexes need n >= 3");
  const int edge_count = n * (n - 1) / 2;
  if (edge_count > kMaxGroundSize) {
    throw std::invalid_argument("K_" + std::to_string(n) + " has " + std::to_string(edge_count) +
                                " edges; at most 63 are supported");
  }
  const Subset all = Subset::range(edge_count);
  if (const auto k = p.clique_size()) {
    if (*k > n) throw std::invalid_argument("no graph on n vertices has a " + std::to_string(*k) +
                                            "-clique; the complex would be void");
    std::vector<Subset> facets;
    for_each_k_subset(n, *k, [&](Subset clique) {
      Subset clique_edges;
      const auto vs = clique.members();
      for (std::size_t a = 0; a < vs.size(); ++a) {
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
          clique_edges = clique_edges.with(edge_index(n, vs[a], vs[b]));
        }
      }
      facets.push_back(all - clique_edges);
    });
    return {SimplicialComplex::from_facets(edge_count, std::move(facets)),
            complete_graph_edges(n)};
  }
  if (edge_count > kMaxSweepGroundSize) {
    throw std::invalid_argument("custom properties are swept over 2^|E| edge sets; |E| <= 22");
  }
  if (!p(n, all)) throw std::invalid_argument("K_n itself lacks the property; the complex is void");
  return {SimplicialComplex::from_face_predicate(edge_count,
                                                 [&](Subset s) { return p(n, all - s); }),
          complete_graph_edges(n)};
}

AdmissibilityResult is_admissible(int n, const GraphProperty& p, int r, bool allow_empty_classes,
                                  const ScanOptions& options) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (r < 1) throw std::invalid_argument("need r >= 1");
  const int edge_count = n * (n - 1) / 2;
  if (edge_count > kMaxGroundSize) throw std::invalid_argument("K_n has more than 63 edges");
  const auto total = bounded_power(static_cast<std::uint64_t>(r), edge_count, options.budget);
  if (!total) {
    throw BudgetExceeded(std::to_string(r) + "^" + std::to_string(edge_count) +
                         " colorings exceed the budget of " + std::to_string(options.budget));
  }
  const Subset all = Subset::range(edge_count);

  constexpr std::uint64_t kChunk = 1 << 14;
  const std::uint64_t chunks = (*total + kChunk - 1) / kChunk;
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> first_failure{kNone};

  auto scan_chunk = [&](std::size_t chunk) {
    const std::uint64_t begin = chunk * kChunk;
    const std::uint64_t end = std::min(*total, begin + kChunk);
    if (begin >= first_failure.load()) return;
    std::vector<int> colour(edge_count);
    std::vector<Subset> classes(r);
    std::uint64_t rest = begin;
    for (int e = 0; e < edge_count; ++e) {
      colour[e] = static_cast<int>(rest % static_cast<std::uint64_t>(r));
      rest /= static_cast<std::uint64_t>(r);
      classes[colour[e]] = classes[colour[e]].with(e + 1);
    }
    for (std::uint64_t index = begin; index < end; ++index) {
      bool skip = false;
      if (!allow_empty_classes) {
        skip = std::any_of(classes.begin(), classes.end(), [](Subset c) { return c.empty(); });
      }
      if (!skip) {
        const bool ok = std::any_of(classes.begin(), classes.end(),
                                    [&](Subset c) { return p(n, all - c); });
        if (!ok) {
          std::uint64_t seen = first_failure.load();
          while (index < seen && !first_failure.compare_exchange_weak(seen, index)) {
          }
          return;
        }
      }
      // Odometer step, edge 1 least significant.
      for (int e = 0; e < edge_count; ++e) {
        classes[colour[e]] = classes[colour[e]].without(e + 1);
        colour[e] = colour[e] + 1 == r ? 0 : colour[e] + 1;
        classes[colour[e]] = classes[colour[e]].with(e + 1);
        if (colour[e] != 0) break;
      }
    }
  };
  detail::run_tasks(options.threads, chunks, scan_chunk);

  AdmissibilityResult result;
  const std::uint64_t failure = first_failure.load();
  result.admissible = failure == kNone;
  if (!result.admissible) {
    std::vector<int> colour(edge_count);
    std::uint64_t rest = failure;
    for (int e = 0; e < edge_count; ++e) {
      colour[e] = static_cast<int>(rest % static_cast<std::uint64_t>(r));
      rest /= static_cast<std::uint64_t>(r);
    }
    result.counterexample = std::move(colour);
  }
  return result;
}

SimplicialComplex weighted_majority_complex(const std::vector<std::int64_t>& weights) {
  const int m = static_cast<int>(weights.size());
  if (m < 1 || m > kMaxSweepGroundSize) {
    throw std::invalid_argument("weighted-majority complexes need 1 <= m <= 22");
  }
  std::int64_t total = 0;
  for (auto w : weights) {
    if (w <= 0) throw std::invalid_argument("weights must be positive, got " + std::to_string(w));
    total += w;
  }
  return SimplicialComplex::from_face_predicate(m, [&](Subset a) {
    std::int64_t sum = 0;
    for (int v : a.members()) sum += weights[v - 1];
    return 2 * sum < total;
  });
}

std::vector<std::int64_t> random_odd_weights(int m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> weights(m);
  std::int64_t total = 0;
  for (auto& w : weights) {
    w = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * m));
    total += w;
  }
  if (total % 2 == 0) weights[0] += 1;
  return weights;
}

SimplicialComplex random_selfdual(int m, std::uint64_t seed) {
  return weighted_majority_complex(random_odd_weights(m, seed));
}

// ---------------------------------------------------------------------------
// Deleted joins

namespace {

class LabelCounter {
 public:
  LabelCounter(const SimplicialComplex& k, int r) : k_(k), r_(r), classes_(r + 1) {}

  /// Applies a fixed prefix of labels; false if some class stops being a face.
  bool assign_prefix(const std::vector<int>& labels) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const int v = static_cast<int>(i) + 1;
      if (labels[i] == 0) continue;
      Subset& c = classes_[labels[i]];
      if (!k_.contains_face(c.with(v))) return false;
      c = c.with(v);
      ++labelled_;
    }
    return true;
  }

  void count_from(int v, std::vector<std::uint64_t>& f) {
    if (v > k_.ground_size()) {
      if (labelled_ > 0) ++f[labelled_ - 1];
      return;
    }
    count_from(v + 1, f);
    for (int label = 1; label <= r_; ++label) {
      Subset& c = classes_[label];
      const Subset grown = c.with(v);
      if (!k_.contains_face(grown)) continue;
      const Subset saved = c;
      c = grown;
      ++labelled_;
      count_from(v + 1, f);
      --labelled_;
      c = saved;
    }
  }

 private:
  const SimplicialComplex& k_;
  int r_;
  std::vector<Subset> classes_;
  int labelled_ = 0;
};

}  // namespace

std::vector<std::uint64_t> deleted_join_faces(const SimplicialComplex& k, int r,
                                              const DeletedJoinOptions& options) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  const int m = k.ground_size();
  if (!bounded_power(static_cast<std::uint64_t>(r) + 1, m, options.budget)) {
    throw BudgetExceeded(std::to_string(r + 1) + "^" + std::to_string(m) +
                         " labellings exceed the budget of " + std::to_string(options.budget));
  }
  // Fix the labels of the first few vertices per task; sum per-task counts
  // in task order.
  int prefix = 0;
  std::uint64_t tasks = 1;
  while (prefix < m && tasks < 256) {
    ++prefix;
    tasks *= static_cast<std::uint64_t>(r) + 1;
  }
  std::vector<std::vector<std::uint64_t>> partial(tasks, std::vector<std::uint64_t>(m, 0));
  detail::run_tasks(options.threads, tasks, [&](std::size_t task) {
    std::vector<int> labels(prefix);
    std::uint64_t rest = task;
    for (int i = 0; i < prefix; ++i) {
      labels[i] = static_cast<int>(rest % (static_cast<std::uint64_t>(r) + 1));
      rest /= static_cast<std::uint64_t>(r) + 1;
    }
    LabelCounter counter(k, r);
    if (counter.assign_prefix(labels)) counter.count_from(prefix + 1, partial[task]);
  });
  std::vector<std::uint64_t> f(m, 0);
  for (const auto& part : partial) {
    for (int d = 0; d < m; ++d) f[d] += part[d];
  }
  return f;
}

}  // namespace unav
