#include <doctest.h>

#include <random>

#include "support.hpp"
#include "unavoidable/certify.hpp"
#include "unavoidable/generators.hpp"

using namespace unav;

namespace {

bool mentions(const Certificate& c, const std::string& needle) {
  for (const auto& r : c.reasons) {
    if (r.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("prime powers") {
  CHECK(prime_power(4) == PrimePower{2, 2});
  CHECK(prime_power(3) == PrimePower{3, 1});
  CHECK(prime_power(2) == PrimePower{2, 1});
  CHECK(prime_power(27) == PrimePower{3, 3});
  CHECK(prime_power(1024) == PrimePower{2, 10});
  CHECK(prime_power(4294967291) == PrimePower{4294967291, 1});
  CHECK_FALSE(prime_power(6).has_value());
  CHECK_FALSE(prime_power(12).has_value());
  CHECK_FALSE(prime_power(1).has_value());
  CHECK_FALSE(prime_power(0).has_value());
  CHECK_THROWS_AS(prime_power((std::int64_t{1} << 32) + 1), std::invalid_argument);

  // Against a brute-force factorization.
  for (std::int64_t r = 2; r < 2000; ++r) {
    std::int64_t p = 2;
    while (r % p != 0) ++p;
    std::int64_t rest = r;
    int k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    const auto got = prime_power(r);
    if (rest == 1) {
      CHECK(got == PrimePower{p, k});
    } else {
      CHECK_FALSE(got.has_value());
    }
  }
}

TEST_CASE("index bounds on the deleted join") {
  for (int n = 0; n <= 4; ++n) {
    const auto c = index_bound_deleted_join(skeleton(n, 2 * n + 3), 2);
    CHECK(c.verdict == Verdict::kCertified);
    CHECK(c.bound == 2 * n + 1);
    CHECK(c.reasons.empty());
  }
  const auto p5 = index_bound_deleted_join(points(5), 3);
  CHECK(p5.verdict == Verdict::kCertified);
  CHECK(p5.bound == 2);

  const auto p4 = index_bound_deleted_join(points(4), 3, 2);
  CHECK(p4.verdict == Verdict::kCertified);
  CHECK(p4.bound == 2);
  CHECK(p4.s == 2);

  // points(5) is not (3, 2)-unavoidable: {1,2} {3,4} {5} leaves one face.
  const auto p5s = index_bound_deleted_join(points(5), 3, 2);
  CHECK(p5s.verdict == Verdict::kAbstained);
  CHECK_FALSE(p5s.bound.has_value());
  CHECK(mentions(p5s, "(3,2)-unavoidable"));

  CHECK_THROWS_AS(index_bound_deleted_join(points(5), 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(index_bound_deleted_join(points(5), 1), std::invalid_argument);
}

TEST_CASE("index bounds on the deleted product") {
  const auto c = index_bound_deleted_product(skeleton(1, 7), 3);
  CHECK(c.verdict == Verdict::kCertified);
  CHECK(c.bound == 2);
  CHECK(c.kind == CertificateKind::kIndexProductBound);

  const auto six = index_bound_deleted_product(skeleton(1, 7), 6);
  CHECK(six.verdict == Verdict::kAbstained);
  CHECK_FALSE(six.bound.has_value());
  CHECK(mentions(six, "not a prime power"));
}

TEST_CASE("index bound at r = pi(K) is m - pi(K)") {
  std::mt19937_64 rng(71);
  int tried = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 9);
    const auto k = testing::random_complex(rng, m);
    const int pi = partition_number(k);
    if (pi < 2 || pi > m || !prime_power(pi)) continue;
    ++tried;
    const auto c = index_bound_deleted_join(k, pi);
    REQUIRE(c.verdict == Verdict::kCertified);
    CHECK(*c.bound == m - pi);
  }
  CHECK(tried > 50);
}

TEST_CASE("join non-embeddability examples") {
  const std::vector three{points(5), points(5), points(5)};
  const auto c = certify_join_nonembeddable(three, 3, 3);
  CHECK(c.verdict == Verdict::kCertified);
  CHECK(c.inequality->left == 15);
  CHECK(c.inequality->right == 15);
  CHECK_FALSE(c.schild_form.has_value());
  CHECK(c.s == 3);

  const auto too_high = certify_join_nonembeddable(three, 3, 4);
  CHECK(too_high.verdict == Verdict::kNotCertified);
  CHECK(mentions(too_high, "dimension inequality fails"));

  // Factors 2 and 3 fail 3-unavoidability and are each named.
  const std::vector mixed{points(4), points(6), points(7)};
  const auto bad = certify_join_nonembeddable(mixed, 3, 1);
  CHECK(bad.verdict == Verdict::kNotCertified);
  CHECK_FALSE(mentions(bad, "factor 1"));
  CHECK(mentions(bad, "factor 2 (m = 6)"));
  CHECK(mentions(bad, "factor 3 (m = 7)"));
  CHECK(bad.reasons.size() == 2);

  // One factor: the van Kampen-Flores setting.
  for (int n = 0; n <= 3; ++n) {
    const std::vector one{skeleton(n, 2 * n + 3)};
    const auto vkf = certify_join_nonembeddable(one, 2, 2 * n);
    CHECK(vkf.verdict == Verdict::kCertified);
    REQUIRE(vkf.schild_form.has_value());
    CHECK(vkf.schild_form->holds());
    CHECK(certify_join_nonembeddable(one, 2, 2 * n + 1).verdict == Verdict::kNotCertified);
  }

  const auto six = certify_join_nonembeddable(three, 6, 1);
  CHECK(six.verdict == Verdict::kAbstained);
  CHECK(mentions(six, "not a prime power"));

  CHECK_THROWS_AS(certify_join_nonembeddable({}, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(certify_join_nonembeddable(three, 2, -1), std::invalid_argument);
}

TEST_CASE("single-complex non-embeddability examples") {
  const auto c = certify_single_nonembeddable(skeleton(1, 7), 3, 1);
  CHECK(c.verdict == Verdict::kCertified);
  CHECK(c.inequality->left == 7);
  CHECK(c.inequality->right == 7);

  const auto high = certify_single_nonembeddable(skeleton(1, 7), 3, 2);
  CHECK(high.verdict == Verdict::kNotCertified);
  CHECK(mentions(high, "vertex count inequality fails"));

  // Both hypotheses fail and both are listed.
  const auto two = certify_single_nonembeddable(points(7), 3, 2);
  CHECK(two.verdict == Verdict::kNotCertified);
  CHECK(two.reasons.size() == 2);

  CHECK(certify_single_nonembeddable(skeleton(1, 5), 2, 2).verdict == Verdict::kCertified);
  CHECK_THROWS_AS(certify_single_nonembeddable(points(3), 2, 0), std::invalid_argument);
}

TEST_CASE("r = 2 join forms agree and verdicts are monotone in d") {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<SimplicialComplex> factors;
    const int s = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < s; ++i) {
      factors.push_back(testing::random_complex(rng, 1 + static_cast<int>(rng() % 6)));
    }
    const int r = 2 + static_cast<int>(rng() % 3);
    bool previous = true;
    for (int d = 0; d <= 12; ++d) {
      const auto c = certify_join_nonembeddable(factors, r, d);
      if (r == 2) {
        REQUIRE(c.schild_form.has_value());
        CHECK(c.schild_form->holds() == c.inequality->holds());
      }
      const bool certified = c.verdict == Verdict::kCertified;
      CHECK((previous || !certified));
      previous = certified;
      CHECK(certified == c.reasons.empty());
    }
  }
}

TEST_CASE("names") {
  CHECK(to_string(Verdict::kCertified) == "certified");
  CHECK(to_string(Verdict::kNotCertified) == "not_certified");
  CHECK(to_string(Verdict::kAbstained) == "abstained");
  CHECK(to_string(CertificateKind::kJoinNonembeddable) == "join_nonembeddable");
  CHECK(to_string(CertificateKind::kIndexJoinBound) == "index_join_bound");
}
