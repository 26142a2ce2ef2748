#pragma once

// Slow reference implementations used to cross-check the library. Nothing
// here calls into the code paths it is compared against.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "xorcert/circuit.hpp"
#include "xorcert/prg.hpp"
#include "xorcert/xor_instance.hpp"

namespace naive {

using xorcert::Dyadic;
using xorcert::Rational;
using xorcert::Sign;
using xorcert::SignVector;
using xorcert::XorInstance;

inline Sign bit_sign(std::uint64_t mask, unsigned i) { return (mask >> i & 1u) ? Sign{-1} : Sign{1}; }

/// coef[S] = 2^-t sum_x f(x) prod_{j in S} x_j, by direct double summation.
inline std::vector<Rational> walsh(const std::vector<std::uint8_t>& table, unsigned t) {
  const std::size_t size = std::size_t{1} << t;
  std::vector<Rational> coef(size);
  for (std::size_t s = 0; s < size; ++s) {
    std::int64_t sum = 0;
    for (std::size_t x = 0; x < size; ++x) {
      const int f = table[x] ? -1 : 1;
      const int chi = (std::popcount(s & x) % 2) ? -1 : 1;
      sum += f * chi;
    }
    coef[s] = Rational(sum, static_cast<std::int64_t>(size));
  }
  return coef;
}

inline Rational psi(const XorInstance& inst, const SignVector& x) {
  Rational total(0);
  for (std::size_t c = 0; c < inst.m(); ++c) {
    int chi = inst.rhs[c];
    for (auto v : inst.edges()[c]) chi *= x[v];
    total += inst.weights()[c].to_rational() * chi;
  }
  return inst.m() ? total / static_cast<std::int64_t>(inst.m()) : Rational(0);
}

/// max_x |psi(x)| over all 2^n assignments.
inline Rational val(const XorInstance& inst) {
  Rational best(0);
  SignVector x(inst.n());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inst.n()); ++mask) {
    for (unsigned i = 0; i < inst.n(); ++i) x[i] = bit_sign(mask, i);
    const Rational v = psi(inst, x);
    best = std::max(best, v < 0 ? -v : v);
  }
  return best;
}

/// All r-subsets of [n] sorted colexicographically (compare largest element first).
inline std::vector<std::vector<std::uint32_t>> colex_subsets(unsigned n, unsigned r) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<unsigned>(std::popcount(mask)) != r) continue;
    std::vector<std::uint32_t> s;
    for (unsigned i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(i);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

/// Dense level-r matrix: A[S][T] = sum over edges with e = S xor T of w b.
inline std::vector<std::vector<Rational>> kikuchi_dense(const XorInstance& inst, unsigned r) {
  const auto subsets = colex_subsets(inst.n(), r);
  std::vector<std::uint64_t> masks;
  for (const auto& s : subsets) {
    std::uint64_t mask = 0;
    for (auto v : s) mask |= std::uint64_t{1} << v;
    masks.push_back(mask);
  }
  std::vector<std::vector<Rational>> a(subsets.size(), std::vector<Rational>(subsets.size(), Rational(0)));
  for (std::size_t c = 0; c < inst.m(); ++c) {
    std::uint64_t e = 0;
    for (auto v : inst.edges()[c]) e |= std::uint64_t{1} << v;
    for (std::size_t i = 0; i < masks.size(); ++i)
      for (std::size_t j = 0; j < masks.size(); ++j)
        if ((masks[i] ^ masks[j]) == e) a[i][j] += inst.weights()[c].to_rational() * inst.rhs[c];
  }
  return a;
}

/// max over nonempty I with |I| <= order of |E_seed[prod_{i in I} out_i]|.
inline Rational bias(const xorcert::GeneratorSpec& spec, std::size_t order) {
  const std::uint64_t seeds = std::uint64_t{1} << spec.seed_bits();
  std::vector<std::uint64_t> outs;
  for (std::uint64_t s = 0; s < seeds; ++s) {
    const auto y = xorcert::sample(spec, s);
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < y.size(); ++i) mask |= std::uint64_t{y[i] < 0} << i;
    outs.push_back(mask);
  }
  Rational worst(0);
  for (std::uint64_t set = 1; set < (std::uint64_t{1} << spec.m); ++set) {
    if (static_cast<std::size_t>(std::popcount(set)) > order) continue;
    std::int64_t sum = 0;
    for (auto o : outs) sum += (std::popcount(o & set) % 2) ? -1 : 1;
    worst = std::max(worst, Rational(std::abs(sum), static_cast<std::int64_t>(seeds)));
  }
  return worst;
}

/// Every k-subset of coordinates sees each of its 2^k patterns equally often.
inline bool exactly_kwise(const xorcert::GeneratorSpec& spec, unsigned k) {
  const std::uint64_t seeds = std::uint64_t{1} << spec.seed_bits();
  std::vector<SignVector> outs;
  for (std::uint64_t s = 0; s < seeds; ++s) outs.push_back(xorcert::sample(spec, s));
  for (std::uint64_t set = 0; set < (std::uint64_t{1} << spec.m); ++set) {
    if (static_cast<unsigned>(std::popcount(set)) != k) continue;
    std::map<std::uint64_t, std::uint64_t> counts;
    for (const auto& y : outs) {
      std::uint64_t pattern = 0;
      unsigned pos = 0;
      for (std::size_t i = 0; i < spec.m; ++i)
        if (set >> i & 1u) pattern |= std::uint64_t{y[i] < 0} << pos++;
      ++counts[pattern];
    }
    if (counts.size() != (std::size_t{1} << k)) return false;
    for (const auto& [p, cnt] : counts)
      if (cnt * (std::uint64_t{1} << k) != seeds) return false;
  }
  return true;
}

/// All outputs of a circuit over every input, by plain evaluation.
inline std::vector<SignVector> range(const xorcert::Circuit& c) {
  std::vector<SignVector> out;
  const unsigned bits = c.n * c.w;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
    std::vector<std::uint32_t> x(c.n);
    for (std::uint32_t j = 0; j < c.n; ++j) x[j] = static_cast<std::uint32_t>(code >> (j * c.w)) & ((1u << c.w) - 1);
    out.push_back(xorcert::eval_circuit(c, x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// min over range points of the fraction of differing coordinates.
inline Rational min_distance(const xorcert::Circuit& c, const SignVector& b) {
  std::size_t best = b.size();
  for (const auto& y : range(c)) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < b.size(); ++i) d += y[i] != b[i];
    best = std::min(best, d);
  }
  return Rational(static_cast<std::int64_t>(best), static_cast<std::int64_t>(std::max<std::size_t>(1, b.size())));
}

}  // namespace naive
