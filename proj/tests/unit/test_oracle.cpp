#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "naive.hpp"
#include "suites.hpp"
#include "xorcert/errors.hpp"
#include "xorcert/oracle.hpp"

using namespace xorcert;

namespace {

XorInstance instance(std::uint32_t n, std::vector<Edge> edges, SignVector rhs) {
  const int k = static_cast<int>(edges[0].size());
  return make_instance(make_scheme(n, std::move(edges), k), std::move(rhs));
}

Circuit duplicate_pair() {
  const JuntaGate orr{{0, 1}, {0, 1, 1, 1}};
  return Circuit{2, 1, 2, {orr, orr}};
}

SignVector signs_of(std::uint64_t code, std::size_t m) {
  SignVector b(m);
  for (std::size_t i = 0; i < m; ++i) b[i] = naive::bit_sign(code, static_cast<unsigned>(i));
  return b;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("exact value examples") {
  CHECK(oracle::brute_val(instance(3, {{0, 1}}, {1})) == Rational(1));
  CHECK(oracle::brute_val(instance(3, {{0, 1}, {0, 1}}, {1, -1})) == Rational(0));
  const auto triangle = instance(3, {{0, 1}, {1, 2}, {0, 2}}, {1, 1, -1});
  CHECK(oracle::brute_val(triangle) == Rational(1));
  CHECK(triangle.value(SignVector{1, -1, 1}) == Rational(-1));
  CHECK(naive::val(triangle) == Rational(1));
}

TEST_CASE("exact value agrees with plain enumeration") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = suites::random_instance(1 + trial % 4, 9, 1 + rng() % 15, trial % 2 == 0, rng);
    REQUIRE(oracle::brute_val(inst) == naive::val(inst));
  }
  CHECK_THROWS_AS(oracle::brute_val(instance(30, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}, {10, 11}, {12, 13},
                                                 {14, 15}, {16, 17}, {18, 19}, {20, 21}, {22, 23}, {24, 25}},
                                             SignVector(13, 1))),
                  CapExceeded);
}

TEST_CASE("membership and distance examples") {
  Circuit id{3, 1, 1, {JuntaGate{{0}, {0, 1}}, JuntaGate{{1}, {0, 1}}, JuntaGate{{2}, {0, 1}}}};
  for (std::uint64_t code = 0; code < 8; ++code) CHECK(oracle::brute_range_member(id, signs_of(code, 3)));

  const auto dup = duplicate_pair();
  CHECK(!oracle::brute_range_member(dup, SignVector{1, -1}));
  CHECK(oracle::brute_min_distance(dup, SignVector{1, -1}) == Rational(1, 2));

  const std::vector<std::uint32_t> x0{1, 0};
  CHECK(oracle::brute_min_distance(dup, eval_circuit(dup, x0)) == Rational(0));

  Circuit truth{1, 1, 1, {JuntaGate{{}, {1}}}};
  CHECK(oracle::brute_min_distance(truth, SignVector{1}) == Rational(1));
  CHECK(oracle::brute_range(dup) == std::vector<SignVector>{{-1, -1}, {1, 1}});
}

TEST_CASE("range oracles agree with plain evaluation") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 30; ++trial) {
    const auto c = trial % 2 ? random_junta_circuit(4, 2, 5, rng) : random_tree_circuit(3, 1 + trial % 3 / 2, 2, 5, rng);
    const auto range = naive::range(c);
    REQUIRE(oracle::brute_range(c) == range);
    for (std::uint64_t code = 0; code < 32; ++code) {
      const auto y = signs_of(code, 5);
      const bool member = std::binary_search(range.begin(), range.end(), y);
      REQUIRE(oracle::brute_range_member(c, y) == member);
      const auto d = oracle::brute_min_distance(c, y);
      REQUIRE(d == naive::min_distance(c, y));
      REQUIRE((d == Rational(0)) == member);
    }
  }
}

TEST_CASE("generator audits") {
  CHECK(oracle::brute_bias(uniform_spec(6)).is_zero());
  CHECK(oracle::brute_bias(eps_biased_spec_with_degree(4, 4)) <= Dyadic(3, 4));
  CHECK(oracle::brute_independence(kwise_spec(4, 2), 2).is_zero());
  CHECK(!oracle::brute_independence(kwise_spec(4, 1), 2).is_zero());
  CHECK_THROWS_AS(oracle::brute_bias(uniform_spec(20)), CapExceeded);
}

TEST_CASE("decomposition residual") {
  std::mt19937_64 rng(53);
  const auto c = random_tree_circuit(2, 1, 2, 3, rng);
  const auto ens = group_characters(to_layered(c));
  for (std::uint64_t code = 0; code < 4; ++code)
    for (std::uint64_t bc = 0; bc < 8; ++bc) {
      const std::vector<std::uint32_t> x{static_cast<std::uint32_t>(code & 1), static_cast<std::uint32_t>(code >> 1)};
      REQUIRE(oracle::check_decomposition(c, ens, x, signs_of(bc, 3)).is_zero());
    }

  auto broken = ens;
  for (auto& s : broken.schemes)
    if (!s.weights[0].is_zero()) {
      s.weights[0] += Dyadic(1, 2);
      break;
    }
  bool seen = false;
  for (std::uint64_t code = 0; code < 4; ++code) {
    const std::vector<std::uint32_t> x{static_cast<std::uint32_t>(code & 1), static_cast<std::uint32_t>(code >> 1)};
    seen = seen || !oracle::check_decomposition(c, broken, x, SignVector{1, 1, 1}).is_zero();
  }
  CHECK(seen);

  Circuit constant{2, 1, 2, {WordDecisionTree::leaf(1, 1), WordDecisionTree::leaf(1, 0)}};
  const std::vector<std::uint32_t> x{1, 0};
  CHECK(oracle::check_decomposition(constant, x, SignVector{-1, 1}).is_zero());

  SignVector layered(to_layered(c).num_bits());
  for (int s = 0; s < 20; ++s) {
    for (auto& v : layered) v = sign_of_bit(static_cast<unsigned>(rng() & 1u));
    REQUIRE(oracle::check_layered_decomposition(to_layered(c), ens, layered, SignVector{1, -1, 1}).is_zero());
  }
}

TEST_CASE("bound comparison is exact") {
  CHECK(oracle::bound_dominates(1.0, Rational(1)));
  CHECK(!oracle::bound_dominates(std::nextafter(1.0 / 3, 0.0), Rational(1, 3)));
  CHECK(oracle::bound_dominates(1.0 / 3 + 1e-16, Rational(1, 3)));
  CHECK(!oracle::bound_dominates(1.0 / 3, Rational(1, 3)));
  CHECK(oracle::bound_dominates(0.0, Rational(0)));
  CHECK(!oracle::bound_dominates(std::nan(""), Rational(0)));
}

}  // TEST_SUITE
