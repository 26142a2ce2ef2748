#include <doctest.h>

#include <cmath>
#include <random>

#include "naive.hpp"
#include "suites.hpp"
#include "xorcert/errors.hpp"
#include "xorcert/oracle.hpp"
#include "xorcert/refuter.hpp"
#include "xorcert/subset_rank.hpp"

using namespace xorcert;

namespace {

XorInstance instance(std::uint32_t n, std::vector<Edge> edges, SignVector rhs) {
  const int k = edges.empty() ? 0 : static_cast<int>(edges[0].size());
  return make_instance(make_scheme(n, std::move(edges), k), std::move(rhs));
}

std::uint64_t rank_of(std::vector<std::uint32_t> s, unsigned n) {
  return subset_rank(s, n, static_cast<unsigned>(s.size())).rank;
}

RefuteParams with(RefuteMode mode, std::optional<unsigned> ell = std::nullopt) {
  RefuteParams p;
  p.mode = mode;
  p.ell = ell;
  return p;
}

}  // namespace

TEST_SUITE("refuter") {

TEST_CASE("level-one matrix of two edges") {
  const auto inst = instance(4, {{0, 1}, {2, 3}}, {1, -1});
  const auto op = build_kikuchi(inst, 1);
  CHECK(op.dim == 4);
  CHECK(op.entry(0, 1) == Dyadic(1));
  CHECK(op.entry(1, 0) == Dyadic(1));
  CHECK(op.entry(2, 3) == Dyadic(-1));
  CHECK(op.entry(3, 2) == Dyadic(-1));
  CHECK(op.entry(0, 2).is_zero());
  CHECK(op.degree == std::vector<std::uint64_t>{1, 1, 1, 1});
  CHECK(op.average_degree == Rational(1));
  CHECK(op.nnz() == 4);
}

TEST_CASE("one 4-edge at level two") {
  const auto inst = instance(6, {{0, 1, 2, 3}}, {1});
  const auto op = build_kikuchi(inst, 2);
  CHECK(op.edge_multiplier == 6);
  CHECK(op.nnz() == 6);
  CHECK(op.degree_trace() == 6);
  CHECK(op.entry(rank_of({0, 1}, 6), rank_of({2, 3}, 6)) == Dyadic(1));
  CHECK(op.entry(rank_of({0, 2}, 6), rank_of({1, 3}, 6)) == Dyadic(1));
}

TEST_CASE("build rejects bad input") {
  CHECK_THROWS_AS(build_kikuchi(instance(5, {{0, 1, 2}}, {1}), 2), ValidationError);
  CHECK_THROWS_AS(build_kikuchi(instance(4, {{0, 1}}, {1}), 0), ValidationError);
  CHECK_THROWS_AS(build_kikuchi(instance(40, {{0, 1}}, {1}), 20, 1000), CapExceeded);
}

TEST_CASE("matrix agrees with dense pair enumeration") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned k = 2 + 2 * (trial % 2);
    const std::uint32_t n = 6 + trial % 3;
    const unsigned r = k / 2 + trial % 2;
    const auto inst = suites::random_instance(k, n, 12, trial % 3 == 0, rng);
    const auto op = build_kikuchi(inst, r);
    const auto dense = naive::kikuchi_dense(inst, r);
    for (std::uint64_t i = 0; i < op.dim; ++i)
      for (std::uint64_t j = 0; j < op.dim; ++j) REQUIRE(op.entry(i, j).to_rational() == dense[i][j]);
    REQUIRE(Rational(static_cast<std::int64_t>(op.degree_trace())) ==
            op.average_degree * static_cast<std::int64_t>(op.dim));
  }
}

TEST_CASE("quadratic form identity") {
  std::mt19937_64 rng(42);
  for (int config = 0; config < 100; ++config) {
    const unsigned k = config % 2 ? 4 : 2;
    const std::uint32_t n = k + 2 + static_cast<std::uint32_t>(rng() % (9 - k));
    const unsigned r = k / 2 + static_cast<unsigned>(rng() % (std::min(4u, n - k / 2) - k / 2 + 1));
    const auto inst = suites::random_instance(k, n, 1 + rng() % 20, config % 3 == 0, rng);
    const auto op = build_kikuchi(inst, r);
    REQUIRE(Rational(static_cast<std::int64_t>(op.degree_trace())) ==
            op.average_degree * static_cast<std::int64_t>(op.dim));
    for (int s = 0; s < 50; ++s) {
      const auto x = suites::random_signs(n, rng);
      const Rational expected = naive::psi(inst, x) * static_cast<std::int64_t>(inst.m()) *
                                static_cast<std::int64_t>(op.edge_multiplier);
      REQUIRE(op.quadratic_form(x).to_rational() == expected);
    }
  }
  const auto inst = instance(6, {{0, 1}, {2, 3}, {1, 4}}, {1, -1, 1});
  const auto op = build_kikuchi(inst, 2);
  CHECK(op.quadratic_form(SignVector(6, 1)) == Dyadic(static_cast<std::int64_t>(op.edge_multiplier)));
}

TEST_CASE("trace certificate examples") {
  const auto op = build_kikuchi(instance(2, {{0, 1}}, {1}), 1);
  CHECK(op.gamma(0) == Rational(2));
  const double bound = trace_certificate(op, 2);
  CHECK(bound >= std::sqrt(0.5));
  CHECK(bound == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
  CHECK(bound >= 0.5);

  const auto zero = build_kikuchi(instance(3, {{0, 1}, {0, 1}}, {1, -1}), 1);
  CHECK(trace_certificate(zero, 2) == 0.0);
  CHECK_THROWS_AS(trace_certificate(op, 3), ValidationError);
}

TEST_CASE("higher powers do not loosen the trace bound") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = suites::random_instance(2, 10, 30, trial % 2 == 0, rng);
    const auto op = build_kikuchi(inst, 1);
    const double b2 = trace_certificate(op, 2), b4 = trace_certificate(op, 4);
    REQUIRE(b4 <= b2 * (1 + 1e-9));
  }
}

TEST_CASE("spectral certificate examples") {
  const auto op = build_kikuchi(instance(2, {{0, 1}}, {1}), 1);
  const auto sb = spectral_certificate(op);
  REQUIRE(sb);
  CHECK(*sb >= 0.5);
  CHECK(*sb <= 0.5 + 1e-10);

  const auto zero = build_kikuchi(instance(3, {{0, 1}, {0, 1}}, {1, -1}), 1);
  CHECK(spectral_certificate(zero) == 0.0);
  std::mt19937_64 rng(1);
  const auto big = build_kikuchi(suites::random_instance(2, 70, 10, false, rng), 2);
  CHECK(!spectral_certificate(big, 1000));
}

TEST_CASE("spectral bound is below the trace bound") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned k = trial % 2 ? 4 : 2;
    const auto inst = suites::random_instance(k, 9, 25, trial % 3 == 0, rng);
    const auto op = build_kikuchi(inst, k / 2);
    const auto sb = spectral_certificate(op);
    REQUIRE(sb);
    REQUIRE(*sb <= trace_certificate(op, 2));
  }
}

TEST_CASE("refute examples") {
  const auto single = instance(2, {{0, 1}}, {1});
  const auto cert = refute(single, with(RefuteMode::kTrace, 2));
  CHECK(cert.certified);
  CHECK(cert.bound >= 1.0);
  CHECK(cert.bound == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));

  for (auto mode : {RefuteMode::kTrace, RefuteMode::kSpectral, RefuteMode::kAuto}) {
    const auto pair = refute(instance(3, {{0, 1}, {0, 1}}, {1, -1}), with(mode));
    CHECK(pair.certified);
    CHECK(pair.bound == 0.0);
  }
  const auto unary = refute(instance(2, {{0}, {0}}, {1, -1}));
  CHECK(unary.mode == "direct");
  CHECK(unary.bound == 0.0);

  const auto empty = refute(make_instance(make_scheme(3, {}, 2), {}));
  CHECK(empty.bound == 0.0);

  const auto constant = refute(make_instance(make_scheme(3, {{}, {}, {}}, 0), {1, 1, -1}));
  CHECK(constant.bound == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(oracle::bound_dominates(constant.bound, Rational(1, 3)));
}

TEST_CASE("odd reduction examples") {
  const auto disjoint = instance(6, {{0, 1, 2}, {3, 4, 5}}, {1, 1});
  const auto red = odd_to_even(disjoint);
  CHECK(red.groups == 2);
  CHECK(red.diag_term == Dyadic(2));
  CHECK(red.buckets.empty());
  const auto cert = refute(disjoint);
  CHECK(cert.mode == "odd");
  CHECK(cert.bound >= 1.0);
  CHECK(cert.bound == doctest::Approx(1.0).epsilon(1e-12));

  const auto shared = odd_to_even(instance(5, {{0, 1, 2}, {0, 1, 3}}, {1, 1}));
  CHECK(shared.groups == 1);
  REQUIRE(shared.buckets.size() == 1);
  CHECK(shared.buckets[0].scheme.arity == 2);
  CHECK(shared.buckets[0].edges() == std::vector<Edge>{{2, 3}});
  CHECK(shared.buckets[0].weights()[0] == Dyadic(1));
  CHECK(shared.buckets[0].rhs[0] == 1);

  const auto twins = odd_to_even(instance(4, {{0, 1, 2}, {0, 1, 2}}, {1, 1}));
  CHECK(twins.diag_term == Dyadic(4));
  for (const auto& b : twins.buckets) CHECK(b.m() == 0);

  CHECK_THROWS_AS(odd_to_even(instance(4, {{0, 1}}, {1})), ValidationError);
}

TEST_CASE("unit split keeps the value") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = suites::random_instance(2, 6, 6, true, rng);
    const auto split = split_into_units(inst);
    for (const auto& w : split.weights()) REQUIRE(w.abs() == split.weights()[0].abs());
    const Rational scale(static_cast<std::int64_t>(split.m()), static_cast<std::int64_t>(inst.m()));
    REQUIRE(naive::val(split) * scale == naive::val(inst));
    RefuteParams p;
    p.split_unit_weights = true;
    REQUIRE(oracle::bound_dominates(refute(inst, p).bound, naive::val(inst)));
  }
}

TEST_CASE("certified bounds dominate the exact value") {
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 120; ++trial) {
    const unsigned k = 1 + trial % 5;
    const std::uint32_t n = std::max<std::uint32_t>(k, 6 + trial % 5);
    const auto inst = suites::random_instance(k, n, 4 + rng() % 30, trial % 2 == 0, rng);
    const auto exact = naive::val(inst);
    for (auto mode : {RefuteMode::kTrace, RefuteMode::kSpectral}) {
      const auto cert = refute(inst, with(mode));
      if (cert.certified) REQUIRE(oracle::bound_dominates(cert.bound, exact));
    }
  }
}

TEST_CASE("mixed arity is refuted per arity") {
  XorScheme s = make_scheme(5, {{0, 1}, {2}, {1, 3, 4}, {}}, 3);
  s.mixed_arity = true;
  const auto inst = make_instance(s, {1, -1, 1, 1});
  const auto cert = refute(inst);
  CHECK(cert.mode == "mixed");
  CHECK(cert.breakdown.size() == 4);
  CHECK(oracle::bound_dominates(cert.bound, naive::val(inst)));
}

TEST_CASE("defaults") {
  CHECK(default_level(4, 10) == 2);
  CHECK(default_power(1, 12) == 6);
  CHECK(default_power(0, 12) == 2);
  CHECK(parse_refute_mode("spectral") == RefuteMode::kSpectral);
  CHECK_THROWS_AS(parse_refute_mode("fast"), ValidationError);
}

}  // TEST_SUITE
