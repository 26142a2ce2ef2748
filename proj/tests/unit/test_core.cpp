#include <doctest.h>

#include <algorithm>
#include <random>

#include "naive.hpp"
#include "suites.hpp"
#include "xorcert/dyadic.hpp"
#include "xorcert/errors.hpp"
#include "xorcert/subset_rank.hpp"
#include "xorcert/xor_instance.hpp"

using namespace xorcert;

TEST_SUITE("core") {

TEST_CASE("dyadic canonical form") {
  CHECK(Dyadic(4, 2) == Dyadic(1));
  CHECK(Dyadic(6, 3).numerator() == 3);
  CHECK(Dyadic(6, 3).log_denominator() == 2);
  CHECK(Dyadic(0, 5).log_denominator() == 0);
  CHECK((Dyadic(1, 1) + Dyadic(1, 1)) == Dyadic(1));
  CHECK((Dyadic(3, 2) * Dyadic(1, 1)).to_string() == "3/2^3");
  CHECK_THROWS_AS(Dyadic(1) / Dyadic(3), std::domain_error);
  CHECK_THROWS_AS(Dyadic(1) / Dyadic(0), std::domain_error);
}

TEST_CASE("dyadic arithmetic is exact on random pairs") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> num(-(1 << 20), 1 << 20);
  std::uniform_int_distribution<unsigned> den(0, 20);
  for (int i = 0; i < 10000; ++i) {
    const Dyadic a(num(rng), den(rng)), b(num(rng), den(rng));
    REQUIRE((a + b) - b == a);
    if (!b.is_zero()) REQUIRE(((a * b) / b) == a);
    REQUIRE((a * b).to_rational() == a.to_rational() * b.to_rational());
  }
}

TEST_CASE("subset rank examples") {
  const std::vector<std::uint32_t> s01{0, 1}, s23{2, 3}, s02{0, 2};
  CHECK(subset_rank(s01, 4, 2).rank == 0);
  CHECK(subset_rank(s23, 4, 2).rank == 5);
  CHECK(subset_rank(s02, 4, 2).rank == 1);
  CHECK(subset_unrank(SubsetRank{4, 2, 5}) == s23);
}

TEST_CASE("subset rank matches a colex enumeration") {
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned r = 0; r <= std::min(n, 6u); ++r) {
      const auto all = naive::colex_subsets(n, r);
      REQUIRE(all.size() == binomial(n, r));
      for (std::uint64_t i = 0; i < all.size(); ++i) {
        REQUIRE(subset_rank(all[i], n, r).rank == i);
        REQUIRE(subset_unrank(SubsetRank{n, r, i}) == all[i]);
      }
    }
}

TEST_CASE("subset rank rejects malformed subsets") {
  const std::vector<std::uint32_t> dup{1, 1}, unsorted{2, 1}, far{0, 4}, short_{0};
  CHECK_THROWS_AS(subset_rank(dup, 4, 2), ValidationError);
  CHECK_THROWS_AS(subset_rank(unsorted, 4, 2), ValidationError);
  CHECK_THROWS_AS(subset_rank(far, 4, 2), ValidationError);
  CHECK_THROWS_AS(subset_rank(short_, 4, 2), ValidationError);
  CHECK_THROWS_AS(subset_unrank(SubsetRank{4, 2, 6}), ValidationError);
}

TEST_CASE("validate_instance") {
  auto ok = make_instance(make_scheme(4, {{0, 1}, {1, 2}, {2, 3}}, 2), {1, -1, 1});
  CHECK(instance_issues(ok).empty());

  auto dup = ok;
  dup.scheme.hypergraph.edges[1] = {1, 1};
  const auto issues = instance_issues(dup);
  REQUIRE(issues.size() >= 1);
  CHECK(issues[0].find("edge 1") != std::string::npos);
  CHECK_THROWS_AS(validate_instance(dup), ValidationError);

  auto heavy = ok;
  heavy.scheme.weights[2] = Dyadic(3, 1);
  CHECK(!instance_issues(heavy).empty());

  auto empty_edge = make_instance(make_scheme(4, {{}}, 0), {1});
  CHECK(instance_issues(empty_edge).empty());
  XorInstance mixed{make_scheme(4, {{0, 1}, {}}, 2), {1, 1}};
  CHECK(!instance_issues(mixed).empty());
  mixed.scheme.mixed_arity = true;
  CHECK(instance_issues(mixed).empty());
}

TEST_CASE("every violation is reported") {
  XorInstance bad{make_scheme(3, {{0, 0}, {1, 5}}, 2), {1, 2}};
  bad.scheme.weights[0] = Dyadic(-5, 2);
  CHECK(instance_issues(bad).size() >= 4);
}

TEST_CASE("value does not depend on edge order") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = suites::random_instance(3, 8, 20, true, rng);
    std::vector<std::size_t> perm(inst.m());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    XorScheme shuffled{Hypergraph{inst.n(), {}}, {}, inst.scheme.arity};
    SignVector rhs;
    for (auto p : perm) {
      shuffled.hypergraph.edges.push_back(inst.edges()[p]);
      shuffled.weights.push_back(inst.weights()[p]);
      rhs.push_back(inst.rhs[p]);
    }
    const auto other = make_instance(shuffled, rhs);
    const auto x = suites::random_signs(inst.n(), rng);
    REQUIRE(inst.value(x) == other.value(x));
    REQUIRE(inst.value(x) == naive::psi(inst, x));
  }
}

}  // TEST_SUITE
