#include <doctest.h>

#include <random>

#include "support.hpp"
#include "unavoidable/errors.hpp"
#include "unavoidable/generators.hpp"
#include "unavoidable/partition.hpp"

using namespace unav;

namespace {

/// Triangle test straight from the edge table.
bool brute_has_triangle(int n, Subset edges) {
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        if (edges.contains(edge_index(n, a, b)) && edges.contains(edge_index(n, a, c)) &&
            edges.contains(edge_index(n, b, c))) {
          return true;
        }
      }
    }
  }
  return false;
}

/// f-vector of the deleted join by enumerating every labelling.
std::vector<std::uint64_t> brute_deleted_join(const SimplicialComplex& k, int r) {
  const int m = k.ground_size();
  std::vector<std::uint64_t> f(m, 0);
  std::vector<int> label(m, 0);
  while (true) {
    std::vector<Subset> classes(r + 1);
    int used = 0;
    for (int v = 0; v < m; ++v) {
      classes[label[v]] = classes[label[v]].with(v + 1);
      used += label[v] != 0 ? 1 : 0;
    }
    bool face = true;
    for (int c = 1; c <= r; ++c) face = face && testing::brute_is_face(k, classes[c]);
    if (face && used > 0) ++f[used - 1];
    int v = 0;
    while (v < m && ++label[v] > r) label[v++] = 0;
    if (v == m) return f;
  }
}

std::uint64_t total(const std::vector<std::uint64_t>& f) {
  std::uint64_t t = 0;
  for (auto x : f) t += x;
  return t;
}

}  // namespace

TEST_CASE("edge numbering is lexicographic") {
  const auto edges = complete_graph_edges(5);
  REQUIRE(edges.size() == 10);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    CHECK(edge_index(5, edges[e].first, edges[e].second) == static_cast<int>(e) + 1);
    CHECK(edge_index(5, edges[e].second, edges[e].first) == static_cast<int>(e) + 1);
  }
  CHECK(edges.front() == std::pair(1, 2));
  CHECK(edges[4] == std::pair(2, 3));
  CHECK_THROWS_AS(edge_index(5, 2, 2), std::invalid_argument);
}

TEST_CASE("clique detection matches brute force for triangles") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Subset edges = Subset(rng()) & Subset::range(n * (n - 1) / 2);
    CHECK(has_clique(n, edges, 3) == brute_has_triangle(n, edges));
  }
  CHECK(has_clique(4, Subset::range(6), 4));
  CHECK_FALSE(has_clique(4, Subset::range(5), 4));
  CHECK(has_clique(3, Subset{}, 1));
  CHECK_FALSE(has_clique(3, Subset{}, 2));
}

TEST_CASE("the clique property is monotone") {
  for (int k = 2; k <= 4; ++k) {
    for (int n = k; n <= 8; ++n) {
      CHECK_FALSE(find_monotonicity_violation(GraphProperty::contains_clique(k), n, 1000,
                                              static_cast<std::uint64_t>(n * 10 + k))
                      .has_value());
    }
  }
  // The guard does catch a non-monotone property.
  const auto odd = GraphProperty::custom("odd edge count",
                                         [](int, Subset e) { return e.size() % 2 == 1; });
  CHECK(find_monotonicity_violation(odd, 5, 1000, 1).has_value());
}

TEST_CASE("skeletons and points") {
  for (int n = 1; n <= 4; ++n) CHECK(is_self_dual(skeleton(n, 2 * n + 3)));
  CHECK(skeleton(0, 5) == points(5));
  for (int m = 1; m <= 6; ++m) {
    CHECK(skeleton(m - 1, m).is_full());
    CHECK(partition_number(skeleton(m - 1, m)) == 1);
  }
  const auto k = skeleton(2, 6);
  for (Subset f : k.facets()) CHECK(f.size() == 3);
  for (Subset n : k.min_nonfaces()) CHECK(n.size() == 4);
  CHECK(k.facets().size() == 20);
  CHECK(k.min_nonfaces().size() == 15);
  CHECK_THROWS_AS(skeleton(-1, 4), std::invalid_argument);
  CHECK_THROWS_AS(skeleton(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(points(0), std::invalid_argument);
  CHECK(partition_number(points(5)) == 3);
  CHECK_FALSE(is_r_unavoidable(points(6), 3).unavoidable);
  CHECK(points(1).is_full());
  CHECK(partition_number(points(1)) == 1);
}

TEST_CASE("Ramsey complex examples") {
  const auto l6 = ramsey_complex(6, GraphProperty::contains_clique(3));
  CHECK(l6.complex.ground_size() == 15);
  CHECK(l6.edges == complete_graph_edges(6));
  CHECK(l6.complex.facets().size() == 20);
  CHECK(is_r_unavoidable(l6.complex, 2).unavoidable);

  const auto l5 = ramsey_complex(5, GraphProperty::contains_clique(3));
  const auto v = is_r_unavoidable(l5.complex, 2);
  REQUIRE_FALSE(v.unavoidable);
  // Both colour classes of the witness are triangle-free 5-cycles.
  for (Subset block : v.witness->blocks) {
    CHECK(block.size() == 5);
    CHECK_FALSE(brute_has_triangle(5, block));
  }

  const auto l3 = ramsey_complex(3, GraphProperty::contains_clique(3));
  CHECK(l3.complex == SimplicialComplex::from_facets(3, {Subset{}}));

  CHECK_THROWS_AS(ramsey_complex(2, GraphProperty::contains_clique(2)), std::invalid_argument);
  CHECK_THROWS_AS(ramsey_complex(12, GraphProperty::contains_clique(3)), std::invalid_argument);
  CHECK_THROWS_AS(ramsey_complex(4, GraphProperty::contains_clique(5)), std::invalid_argument);
}

TEST_CASE("Ramsey complexes follow the definition face by face") {
  const auto triangle = GraphProperty::custom(
      "triangle", [](int n, Subset e) { return brute_has_triangle(n, e); });
  for (int n = 3; n <= 6; ++n) {
    const auto fast = ramsey_complex(n, GraphProperty::contains_clique(3));
    const auto swept = ramsey_complex(n, triangle);
    CHECK(fast.complex == swept.complex);
    const int e = n * (n - 1) / 2;
    for (Subset::Bits bits = 0; bits < (Subset::Bits{1} << e); ++bits) {
      const Subset s(bits);
      REQUIRE(fast.complex.contains_face(s) == brute_has_triangle(n, Subset::range(e) - s));
    }
  }
}

TEST_CASE("admissibility examples") {
  const auto k3 = GraphProperty::contains_clique(3);
  CHECK(is_admissible(6, k3, 2).admissible);
  const auto five = is_admissible(5, k3, 2);
  CHECK_FALSE(five.admissible);
  REQUIRE(five.counterexample.has_value());
  // The counterexample really has no colour class with a triangle in its complement.
  Subset classes[2];
  for (std::size_t e = 0; e < five.counterexample->size(); ++e) {
    const int c = (*five.counterexample)[e];
    classes[c] = classes[c].with(static_cast<int>(e) + 1);
  }
  for (Subset c : classes) CHECK_FALSE(brute_has_triangle(5, Subset::range(10) - c));
  CHECK_FALSE(is_admissible(3, k3, 2, false).admissible);
  // Colouring every edge alike leaves the full edge set to one class, but two
  // nonempty classes on three edges never do.
  CHECK_FALSE(is_admissible(3, k3, 2, true).admissible);
  CHECK_THROWS_AS(is_admissible(6, k3, 3, true, ScanOptions{std::uint64_t{1} << 20, 1}),
                  BudgetExceeded);
}

TEST_CASE("admissibility without empty classes is unavoidability of the Ramsey complex") {
  for (int k = 2; k <= 4; ++k) {
    for (int n = std::max(3, k); n <= 6; ++n) {
      const auto p = GraphProperty::contains_clique(k);
      const auto l = ramsey_complex(n, p);
      for (int r = 2; r <= 2; ++r) {
        CHECK(is_admissible(n, p, r, false).admissible ==
              is_r_unavoidable(l.complex, r).unavoidable);
      }
    }
  }
  for (int n = 3; n <= 4; ++n) {
    const auto p = GraphProperty::contains_clique(3);
    const auto l = ramsey_complex(n, p);
    CHECK(is_admissible(n, p, 3, false).admissible == is_r_unavoidable(l.complex, 3).unavoidable);
  }
}

TEST_CASE("admissibility scans do not depend on the thread count") {
  const auto p = GraphProperty::contains_clique(3);
  for (int n = 4; n <= 6; ++n) {
    const auto one = is_admissible(n, p, 2, true, ScanOptions{std::uint64_t{1} << 26, 1});
    const auto many = is_admissible(n, p, 2, true, ScanOptions{std::uint64_t{1} << 26, 8});
    CHECK(one.admissible == many.admissible);
    CHECK(one.counterexample == many.counterexample);
  }
}

TEST_CASE("weighted-majority complexes") {
  CHECK(weighted_majority_complex({1, 1, 1, 1, 1}) == skeleton(1, 5));
  const auto k = weighted_majority_complex({3, 1, 1});
  CHECK(k == SimplicialComplex::from_facets(3, {Subset::of({2, 3})}));
  CHECK(is_self_dual(k));
  CHECK_THROWS_AS(weighted_majority_complex({1, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(weighted_majority_complex({}), std::invalid_argument);
}

TEST_CASE("random self-dual complexes") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int m = 1 + static_cast<int>(seed % 12);
    const auto w = random_odd_weights(m, seed);
    std::int64_t sum = 0;
    for (auto x : w) {
      CHECK(x >= 1);
      CHECK(x <= 2 * m + 1);
      sum += x;
    }
    CHECK(sum % 2 == 1);
    const auto k = random_selfdual(m, seed);
    CHECK(is_self_dual(k));
    CHECK(random_selfdual(m, seed) == k);
    if (m >= 2) CHECK(is_minimally_r_unavoidable(k, 2));
  }
  CHECK(random_odd_weights(8, 1) != random_odd_weights(8, 2));
}

TEST_CASE("deleted join f-vectors") {
  // Points on [2] with r = 2: 4 vertices, 2 edges.
  const auto f = deleted_join_faces(points(2), 2);
  CHECK(f == std::vector<std::uint64_t>{4, 2});
  CHECK(total(f) == 6);

  for (int m = 1; m <= 7; ++m) {
    for (int r = 1; r <= 3; ++r) {
      const auto full = skeleton(m - 1, m);
      std::uint64_t expected = 1;
      for (int i = 0; i < m; ++i) expected *= static_cast<std::uint64_t>(r + 1);
      CHECK(total(deleted_join_faces(full, r)) == expected - 1);
    }
  }

  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 7);
    const int r = 1 + static_cast<int>(rng() % 3);
    const auto k = testing::random_complex(rng, m);
    CHECK(deleted_join_faces(k, r) == brute_deleted_join(k, r));
    CHECK(deleted_join_faces(k, r, DeletedJoinOptions{std::uint64_t{1} << 30, 4}) ==
          deleted_join_faces(k, r));
  }
  CHECK_THROWS_AS(deleted_join_faces(points(20), 3, DeletedJoinOptions{1000, 1}), BudgetExceeded);
}

TEST_CASE("deleted joins commute with joins") {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 40; ++trial) {
    const int m1 = 1 + static_cast<int>(rng() % 5);
    const int m2 = 1 + static_cast<int>(rng() % 5);
    const int r = 2 + static_cast<int>(rng() % 2);
    const auto k1 = testing::random_complex(rng, m1);
    const auto k2 = testing::random_complex(rng, m2);
    const auto joint = total(deleted_join_faces(join(k1, k2), r)) + 1;
    CHECK(joint == (total(deleted_join_faces(k1, r)) + 1) * (total(deleted_join_faces(k2, r)) + 1));
  }
}
