#include <doctest.h>

#include <bit>
#include <random>

#include "naive.hpp"
#include "xorcert/circuit.hpp"
#include "xorcert/errors.hpp"
#include "xorcert/fourier.hpp"

using namespace xorcert;

namespace {

JuntaGate gate(std::vector<std::uint32_t> inputs, const std::string& table) {
  JuntaGate g{std::move(inputs), {}};
  for (char ch : table) g.table.push_back(static_cast<std::uint8_t>(ch - '0'));
  return g;
}

std::vector<std::uint8_t> table_of(std::uint64_t code, unsigned t) {
  std::vector<std::uint8_t> table(std::size_t{1} << t);
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<std::uint8_t>(code >> i & 1u);
  return table;
}

std::vector<std::uint32_t> iota_inputs(unsigned t) {
  std::vector<std::uint32_t> in(t);
  for (unsigned i = 0; i < t; ++i) in[i] = i;
  return in;
}

// x_{(x0 + 5)/2} in 1-based terms: x0 = +1 reads variable 2, x0 = -1 reads variable 1.
WordDecisionTree index_function() {
  WordDecisionTree t;
  t.w = 1;
  t.nodes.resize(7);
  t.nodes[0] = {0, 0, {1, 2}};
  t.nodes[1] = {2, 0, {3, 4}};
  t.nodes[2] = {1, 0, {5, 6}};
  for (std::uint32_t leaf = 3; leaf < 7; ++leaf) t.nodes[leaf] = {-1, static_cast<std::uint8_t>((leaf - 3) % 2), {}};
  return t;
}

void check_against_walsh(const FourierExpansion& exp, const std::vector<std::uint8_t>& table, unsigned t) {
  const auto ref = naive::walsh(table, t);
  std::size_t nonzero = 0;
  for (std::size_t s = 0; s < ref.size(); ++s) {
    Character alpha;
    for (unsigned j = 0; j < t; ++j)
      if (s >> j & 1u) alpha.push_back(j);
    REQUIRE(exp.coefficient(alpha).to_rational() == ref[s]);
    nonzero += ref[s] != Rational(0);
  }
  REQUIRE(exp.coefficients.size() == nonzero);
}

}  // namespace

TEST_SUITE("fourier") {

TEST_CASE("junta examples") {
  const auto x = expand_junta(gate({0, 1}, "0110"), 2);
  CHECK(x.coefficients.size() == 1);
  CHECK(x.coefficient({0, 1}) == Dyadic(1));

  const auto orr = expand_junta(gate({0, 1}, "0111"), 2);
  CHECK(orr.coefficient({}) == Dyadic(-1, 1));
  CHECK(orr.coefficient({0}) == Dyadic(1, 1));
  CHECK(orr.coefficient({1}) == Dyadic(1, 1));
  CHECK(orr.coefficient({0, 1}) == Dyadic(1, 1));
  check_against_walsh(orr, {0, 1, 1, 1}, 2);

  const auto truth = expand_junta(gate({}, "1"), 3);
  CHECK(truth.coefficients.size() == 1);
  CHECK(truth.coefficient({}) == Dyadic(-1));

  CHECK_THROWS_AS(expand_junta(gate({0, 1}, "011"), 2), ValidationError);
}

TEST_CASE("decision tree examples") {
  WordDecisionTree single;
  single.w = 1;
  single.nodes = {{4, 0, {1, 2}}, {-1, 0, {}}, {-1, 1, {}}};
  const auto s = expand_decision_tree(single, 6, 1);
  CHECK(s.coefficients.size() == 1);
  CHECK(s.coefficient({4}) == Dyadic(1));

  const auto f = expand_decision_tree(index_function(), 3, 2);
  CHECK(f.coefficients.size() == 4);
  for (const Character& alpha : {Character{1}, Character{2}, Character{0, 1}, Character{0, 2}})
    CHECK(f.coefficient(alpha).abs() == Dyadic(1, 1));
  CHECK(f.coefficient({0, 1}).abs() + f.coefficient({0, 2}).abs() == Dyadic(1));
  CHECK(level_weight(f, 2) == Dyadic(1));

  WordDecisionTree conj;
  conj.w = 1;
  conj.nodes = {{0, 0, {1, 2}}, {-1, 0, {}}, {1, 0, {3, 4}}, {-1, 0, {}}, {-1, 1, {}}};
  CHECK(expand_decision_tree(conj, 2, 2) == expand_junta(gate({0, 1}, "0001"), 2));

  CHECK_THROWS_AS(expand_decision_tree(index_function(), 3, 1), ValidationError);
}

TEST_CASE("level weight examples") {
  CHECK(level_weight(expand_junta(gate({0, 1}, "0111"), 2), 2) == Dyadic(1, 1));
  for (unsigned t = 1; t <= 5; ++t) {
    std::string table;
    for (unsigned i = 0; i < (1u << t); ++i) table.push_back(std::popcount(i) % 2 ? '1' : '0');
    CHECK(level_weight(expand_junta(gate(iota_inputs(t), table), t), t) == Dyadic(1));
  }
}

TEST_CASE("classify examples") {
  FourierExpansion x;
  x.n_vars = 3;
  x.add({1, 2}, Dyadic(1));
  CHECK(classify_parity(x).kind == ParityKind::kXor);
  CHECK(classify_parity(x).character == Character{1, 2});
  FourierExpansion nx = x;
  nx.coefficients.begin()->second = Dyadic(-1);
  CHECK(classify_parity(nx).kind == ParityKind::kNxor);
  CHECK(classify_parity(expand_junta(gate({0, 1}, "0111"), 2)).kind == ParityKind::kOther);

  FourierExpansion broken;
  broken.n_vars = 2;
  broken.add({0}, Dyadic(1, 1));
  CHECK_THROWS_AS(classify_parity(broken), ValidationError);
}

TEST_CASE("every table with t <= 3 against direct summation") {
  for (unsigned t = 0; t <= 3; ++t)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (1u << t)); ++code) {
      const auto table = table_of(code, t);
      const auto exp = expand_junta(JuntaGate{iota_inputs(t), table}, t);
      REQUIRE(exp.squared_norm() == Dyadic(1));
      REQUIRE(exp.coefficients.size() <= (std::size_t{1} << t));
      for (const auto& [alpha, c] : exp.coefficients) REQUIRE(c.log_denominator() <= t);
      check_against_walsh(exp, table, t);

      const auto cls = classify_parity(exp);
      const auto ref = naive::walsh(table, t);
      std::size_t nonzero = 0;
      for (const auto& c : ref) nonzero += c != Rational(0);
      const bool parity = nonzero == 1;
      REQUIRE((cls.kind != ParityKind::kOther) == parity);
      if (!parity && t >= 1) {
        const Dyadic top = exp.coefficient(iota_inputs(t)).abs();
        REQUIRE(top <= Dyadic(1) - Dyadic(1, t - 1));
      }
    }
}

TEST_CASE("random t = 4 juntas") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 1000; ++i) {
    const auto table = table_of(rng() & 0xffff, 4);
    const std::vector<std::uint32_t> inputs{3, 7, 1, 10};
    const auto exp = expand_junta(JuntaGate{inputs, table}, 12);
    REQUIRE(exp.squared_norm() == Dyadic(1));
    REQUIRE(exp.coefficients.size() <= 16);
    for (const auto& [alpha, c] : exp.coefficients) {
      REQUIRE(c.log_denominator() <= 4);
      for (auto v : alpha) REQUIRE(std::find(inputs.begin(), inputs.end(), v) != inputs.end());
    }
  }
}

TEST_CASE("random trees: top level weight at most one") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const unsigned t = 1 + i % 4;
    const std::uint32_t n = t + static_cast<std::uint32_t>(rng() % (13 - t));
    const auto tree = random_tree(n, 1, t, rng);
    const auto exp = expand_decision_tree(tree, n, t);
    REQUIRE(exp.squared_norm() == Dyadic(1));
    REQUIRE(level_weight(exp, t) <= Dyadic(1));
    REQUIRE(exp.degree() <= t);
    if (n <= 8) {
      std::vector<std::int8_t> x(n);
      for (std::uint32_t code = 0; code < (1u << n); ++code) {
        for (std::uint32_t j = 0; j < n; ++j) x[j] = naive::bit_sign(code, j);
        const Sign direct = eval_gate(Gate{tree}, 1, [&](std::uint32_t j) { return code >> j & 1u; });
        REQUIRE(exp.evaluate(x) == Dyadic(direct));
      }
    }
  }
}

}  // TEST_SUITE
