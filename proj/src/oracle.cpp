#include "xorcert/oracle.hpp"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <limits>
#include <string>

#include "xorcert/errors.hpp"

namespace xorcert::oracle {

Rational brute_val(const XorInstance& inst) {
  validate_instance(inst);
  const std::size_t m = inst.m();
  if (m == 0) return Rational(0);

  unsigned scale = 0;
  for (const auto& w : inst.weights()) scale = std::max(scale, w.log_denominator());
  // Integer weights w * 2^scale; the running sum fits comfortably in 128 bits.
  std::vector<__int128> term(m);
  std::vector<std::uint32_t> used;
  for (std::size_t c = 0; c < m; ++c) {
    const auto& w = inst.weights()[c];
    term[c] = static_cast<__int128>(w.numerator()) * (static_cast<__int128>(1) << (scale - w.log_denominator())) *
              inst.rhs[c];
    for (auto v : inst.edges()[c]) used.push_back(v);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  if (used.size() > kMaxValVariables)
    throw CapExceeded("brute_val over " + std::to_string(used.size()) + " variables above cap " +
                      std::to_string(kMaxValVariables));

  std::vector<std::vector<std::size_t>> incident(used.size());
  for (std::size_t c = 0; c < m; ++c)
    for (auto v : inst.edges()[c])
      incident[static_cast<std::size_t>(std::lower_bound(used.begin(), used.end(), v) - used.begin())].push_back(c);

  // Start at all +1; flip one variable per Gray-code step.
  __int128 total = 0;
  for (auto t : term) total += t;
  __int128 best = total < 0 ? -total : total;
  const std::uint64_t steps = std::uint64_t{1} << used.size();
  for (std::uint64_t g = 1; g < steps; ++g) {
    const auto v = static_cast<std::size_t>(std::countr_zero(g));
    for (auto c : incident[v]) {
      total -= 2 * term[c];
      term[c] = -term[c];
    }
    const __int128 a = total < 0 ? -total : total;
    best = std::max(best, a);
  }
  // best / (m 2^scale), reduced through Dyadic to stay in 64 bits.
  while (scale > 0 && best % 2 == 0) {
    best /= 2;
    --scale;
  }
  if (best >= (static_cast<__int128>(1) << 62)) throw std::overflow_error("brute_val: sum out of range");
  const Dyadic d(static_cast<std::int64_t>(best), scale);
  return d.to_rational() / static_cast<std::int64_t>(m);
}

namespace {

// Fast repeated evaluation: output i under the symbol vector x.
void evaluate_into(const Circuit& c, const Symbols& x, SignVector& out) {
  const auto lookup = [&](std::uint32_t j) { return x[j]; };
  for (std::size_t i = 0; i < c.m(); ++i) {
    if (const auto* g = std::get_if<JuntaGate>(&c.gates[i])) {
      std::size_t idx = 0;
      for (unsigned p = 0; p < g->arity(); ++p) idx |= std::size_t{x[g->inputs[p]] & 1u} << p;
      out[i] = sign_of_bit(g->table[idx]);
    } else {
      out[i] = eval_gate(c.gates[i], c.w, lookup);
    }
  }
}

}  // namespace

bool brute_range_member(const Circuit& c, std::span<const Sign> y) {
  validate_circuit(c);
  if (y.size() != c.m()) throw ValidationError("target length mismatch");
  bool found = false;
  SignVector out(c.m());
  struct Stop {};
  try {
    for_each_input(c, kMaxInputBits, [&](const Symbols& x) {
      evaluate_into(c, x, out);
      if (std::equal(out.begin(), out.end(), y.begin())) {
        found = true;
        throw Stop{};
      }
    });
  } catch (const Stop&) {
  }
  return found;
}

Rational brute_min_distance(const Circuit& c, std::span<const Sign> b) {
  validate_circuit(c);
  if (b.size() != c.m()) throw ValidationError("target length mismatch");
  if (c.m() == 0) return Rational(0);
  std::size_t best = c.m();
  SignVector out(c.m());
  for_each_input(c, kMaxInputBits, [&](const Symbols& x) {
    if (best == 0) return;
    evaluate_into(c, x, out);
    std::size_t diff = 0;
    for (std::size_t i = 0; i < c.m() && diff < best; ++i) diff += out[i] != b[i];
    best = std::min(best, diff);
  });
  return Rational(static_cast<std::int64_t>(best), static_cast<std::int64_t>(c.m()));
}

std::vector<SignVector> brute_range(const Circuit& c) {
  validate_circuit(c);
  std::vector<SignVector> range;
  SignVector out(c.m());
  for_each_input(c, kMaxInputBits, [&](const Symbols& x) {
    evaluate_into(c, x, out);
    range.push_back(out);
  });
  std::sort(range.begin(), range.end());
  range.erase(std::unique(range.begin(), range.end()), range.end());
  return range;
}

namespace {

// counts[pattern] over all seeds; pattern bit i set when output i is -1.
std::vector<std::int64_t> output_histogram(const GeneratorSpec& spec) {
  if (spec.m > kMaxAuditOutputs) throw CapExceeded("audit needs m <= " + std::to_string(kMaxAuditOutputs));
  const auto seeds = seed_count(spec, kMaxAuditSeedBits);
  std::vector<std::int64_t> counts(std::size_t{1} << spec.m, 0);
  for (std::uint64_t s = 0; s < seeds; ++s) {
    const auto out = sample(spec, s);
    std::size_t pattern = 0;
    for (std::size_t i = 0; i < spec.m; ++i) pattern |= std::size_t{bit_of_sign(out[i])} << i;
    ++counts[pattern];
  }
  return counts;
}

}  // namespace

Dyadic brute_bias(const GeneratorSpec& spec, std::size_t max_order) {
  auto f = output_histogram(spec);
  const auto seed_bits = spec.seed_bits();
  // Walsh-Hadamard: f[I] = sum_patterns counts * (-1)^{|I & pattern|}.
  for (std::size_t h = 1; h < f.size(); h <<= 1)
    for (std::size_t i = 0; i < f.size(); i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) {
        const auto u = f[j], v = f[j + h];
        f[j] = u + v;
        f[j + h] = u - v;
      }
  std::int64_t worst = 0;
  for (std::size_t mask = 1; mask < f.size(); ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) <= max_order) worst = std::max<std::int64_t>(worst, std::llabs(f[mask]));
  return Dyadic(worst, seed_bits);
}

Dyadic brute_independence(const GeneratorSpec& spec, unsigned k) {
  const auto counts = output_histogram(spec);
  const auto seed_bits = spec.seed_bits();
  if (k == 0 || k > spec.m) throw ValidationError("independence order must lie in [1, m]");
  // Deviation |count_a / 2^seed_bits - 2^-k| = |2^k count_a - 2^seed_bits| / 2^(seed_bits + k).
  std::int64_t worst = 0;
  const std::int64_t total = std::int64_t{1} << seed_bits;
  std::vector<std::int64_t> marginal(std::size_t{1} << k);
  for (std::size_t mask = 0; mask < counts.size(); ++mask) {
    if (static_cast<unsigned>(std::popcount(mask)) != k) continue;
    std::fill(marginal.begin(), marginal.end(), 0);
    for (std::size_t pattern = 0; pattern < counts.size(); ++pattern) {
      if (!counts[pattern]) continue;
      std::size_t a = 0, pos = 0;
      for (std::size_t i = 0; i < spec.m; ++i)
        if (mask >> i & 1u) a |= (pattern >> i & 1u) << pos++;
      marginal[a] += counts[pattern];
    }
    for (auto cnt : marginal) worst = std::max<std::int64_t>(worst, std::llabs((cnt << k) - total));
  }
  return Dyadic(worst, seed_bits + k);
}

namespace {

Dyadic ensemble_sum(const SchemeEnsemble& ens, std::span<const Sign> b,
                    const std::function<SignVector(const EnsembleKey&)>& valuation) {
  Dyadic total;
  for (std::size_t key = 0; key < ens.keys.size(); ++key) {
    const auto& scheme = ens.schemes[key];
    bool any = false;
    for (const auto& w : scheme.weights) any = any || !w.is_zero();
    if (!any) continue;
    const auto inst = attach_rhs(scheme, b);
    total += inst.signed_sum(valuation(ens.keys[key]));
  }
  return total;
}

Dyadic correlation(std::span<const Sign> out, std::span<const Sign> b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < out.size(); ++i) s += out[i] * b[i];
  return Dyadic(s);
}

}  // namespace

Dyadic check_decomposition(const Circuit& c, const SchemeEnsemble& ens, std::span<const std::uint32_t> x,
                           std::span<const Sign> b) {
  if (b.size() != c.m()) throw ValidationError("target length mismatch");
  const auto out = eval_circuit(c, x);
  return correlation(out, b) -
         ensemble_sum(ens, b, [&](const EnsembleKey& key) { return key_valuation_duplicate(ens, key, x); });
}

Dyadic check_decomposition(const Circuit& c, std::span<const std::uint32_t> x, std::span<const Sign> b) {
  return check_decomposition(c, group_characters(to_layered(c)), x, b);
}

Dyadic check_layered_decomposition(const LayeredCircuit& lc, const SchemeEnsemble& ens,
                                   std::span<const Sign> layered_bits, std::span<const Sign> b) {
  if (b.size() != lc.base.m()) throw ValidationError("target length mismatch");
  const auto out = eval_layered(lc, layered_bits);
  return correlation(out, b) -
         ensemble_sum(ens, b, [&](const EnsembleKey& key) { return key_valuation(lc, key, layered_bits); });
}

bool bound_dominates(double bound, const Rational& value) {
  using boost::multiprecision::cpp_int;
  if (std::isnan(bound)) return false;
  if (std::isinf(bound)) return bound > 0;
  int exponent = 0;
  const double mant = std::frexp(bound, &exponent);
  // bound = M 2^(exponent - 53) with M an integer of at most 53 bits.
  const auto big = static_cast<std::int64_t>(std::ldexp(mant, 53));
  const int shift = exponent - 53;
  cpp_int lhs = big, rhs = value.numerator();
  lhs *= value.denominator();
  if (shift >= 0) lhs <<= shift;
  else rhs <<= -shift;
  return lhs >= rhs;
}

}  // namespace xorcert::oracle
