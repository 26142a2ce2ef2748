#include <doctest.h>

#include "naive.hpp"
#include "xorcert/errors.hpp"
#include "xorcert/oracle.hpp"
#include "xorcert/prg.hpp"

using namespace xorcert;

TEST_SUITE("prg") {

TEST_CASE("sample examples") {
  const auto spec = eps_biased_spec_with_degree(4, 4);
  CHECK(spec.seed_bits() == 8);
  const std::vector<std::uint8_t> zero(8, 0);
  CHECK(sample(spec, std::span<const std::uint8_t>(zero)) == SignVector(4, 1));
  CHECK(naive::bias(spec, 4) <= Rational(3, 16));
  CHECK(oracle::brute_bias(spec).to_rational() == naive::bias(spec, 4));
  CHECK(naive::exactly_kwise(kwise_spec(4, 2), 2));
  const std::vector<std::uint8_t> wrong(7, 0);
  CHECK_THROWS_AS(sample(spec, std::span<const std::uint8_t>(wrong)), ValidationError);
}

TEST_CASE("seed counts") {
  CHECK(seed_count(uniform_spec(8)) == 256);
  CHECK(seed_count(uniform_spec(0)) == 1);
  CHECK(seed_count(kwise_spec(4, 2, 2)) == 16);
  CHECK_THROWS_AS(seed_count(kwise_spec(1024, 8, 10)), CapExceeded);
}

TEST_CASE("field polynomials are irreducible") {
  for (unsigned s = 1; s <= 12; ++s) {
    const BinaryField f(s);
    for (std::uint64_t a = 1; a < f.size(); ++a) REQUIRE(f.pow(a, f.size() - 1) == 1);
  }
  for (unsigned s = 13; s <= 32; ++s) {
    const BinaryField f(s);
    std::uint64_t a = 3;
    for (int i = 0; i < 50; ++i) {
      a = (a * 0x9E3779B97F4A7C15ull + 1) & (f.size() - 1);
      if (a == 0) continue;
      REQUIRE(f.pow(a, f.size() - 1) == 1);
    }
  }
}

TEST_CASE("biased specs meet their bias bound") {
  for (unsigned f = 1; f <= 8; ++f)
    for (std::size_t m = 1; m <= 12; m += 1 + (f > 5)) {
      const auto spec = eps_biased_spec_with_degree(m, f);
      const auto measured = naive::bias(spec, m);
      REQUIRE(measured <= spec.bias_bound().to_rational());
      REQUIRE(oracle::brute_bias(spec).to_rational() == measured);
    }
}

TEST_CASE("kwise marginals are exactly uniform") {
  for (unsigned k = 1; k <= 3; ++k)
    for (std::size_t m = k; m <= 16; m += 3) {
      const auto spec = kwise_spec(m, k);
      REQUIRE(naive::exactly_kwise(spec, k));
      for (unsigned j = 1; j <= k; ++j) REQUIRE(oracle::brute_independence(spec, j).is_zero());
    }
}

TEST_CASE("kwise biased specs meet their bias bound on small parities") {
  for (unsigned k = 1; k <= 3; ++k)
    for (std::size_t m = k + 1; m <= 12; m += 4)
      for (unsigned f = 4; f <= 8; f += 2) {
        const auto spec = parse_generator_spec("kwise-biased:k=" + std::to_string(k) + ",m=" + std::to_string(m) +
                                               ",s=4,f=" + std::to_string(f));
        REQUIRE(spec.bias_order() == k);
        const auto measured = naive::bias(spec, k);
        REQUIRE(measured <= spec.bias_bound().to_rational());
        REQUIRE(oracle::brute_bias(spec, k).to_rational() == measured);
      }
}

TEST_CASE("spec strings") {
  const auto kw = parse_generator_spec("kwise:k=8,m=1024,s=10");
  CHECK(kw.kind == GeneratorKind::kKwise);
  CHECK(kw.seed_bits() == 80);
  const auto biased = parse_generator_spec("biased:eps=2^-20,m=4096");
  CHECK(biased.kind == GeneratorKind::kEpsBiased);
  CHECK(biased.bias_bound() <= Dyadic(1, 20));
  for (const auto& text : {"kwise:k=8,m=1024,s=10", "biased:m=4,s=4", "uniform:m=8", "kwise-biased:k=2,m=12,s=4,f=6"})
    CHECK(format_generator_spec(parse_generator_spec(text)) == text);
  CHECK(parse_generator_spec(format_generator_spec(biased)) == biased);
  const auto kb = parse_generator_spec("kwise-biased:k=4,m=64,eps=0.01");
  CHECK(parse_generator_spec(format_generator_spec(kb)) == kb);
  CHECK(kb.bias_bound().to_double() <= 0.01);
  for (const auto& bad : {"kwise:m=4", "biased:m=4", "nope:m=1", "kwise:k=2,m=x", "uniform:m=4,z=1", "kwise:k=2,m=64,s=3"})
    CHECK_THROWS_AS(parse_generator_spec(bad), ValidationError);
}

}  // TEST_SUITE
