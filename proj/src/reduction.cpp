#include "xorcert/reduction.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "xorcert/errors.hpp"

namespace xorcert {

int EnsembleKey::arity() const {
  int a = 0;
  for (auto b : beta) a += b != 0;
  return a;
}

std::uint64_t EnsembleKey::beta_code(unsigned w) const {
  std::uint64_t code = 0;
  for (std::size_t l = 0; l < beta.size(); ++l) code |= std::uint64_t{beta[l]} << (w * l);
  return code;
}

std::size_t SchemeEnsemble::key_id(const EnsembleKey& key) const {
  return static_cast<std::size_t>(key.beta_code(w)) * slots_per_pattern() + key.slot;
}

SchemeEnsemble group_characters(const LayeredCircuit& lc) {
  const unsigned w = lc.w(), t = lc.t();
  const std::uint32_t n = lc.n();
  if (w * t > 10) throw CapExceeded("ensemble of 4^" + std::to_string(w * t) + " keys above cap 4^10");
  SchemeEnsemble ens;
  ens.n = n;
  ens.w = w;
  ens.t = t;
  ens.m = lc.base.m();
  const std::size_t patterns = std::size_t{1} << (w * t);
  const std::size_t slots = patterns;
  const std::uint32_t pattern_mask = (1u << w) - 1;

  ens.keys.reserve(patterns * slots);
  ens.schemes.reserve(patterns * slots);
  for (std::size_t code = 0; code < patterns; ++code) {
    EnsembleKey key;
    key.beta.resize(t);
    for (unsigned l = 0; l < t; ++l) key.beta[l] = static_cast<std::uint32_t>(code >> (w * l)) & pattern_mask;
    Edge filler;
    for (unsigned l = 0; l < t; ++l)
      if (key.beta[l]) filler.push_back(l * n);
    for (std::size_t s = 0; s < slots; ++s) {
      key.slot = static_cast<std::uint32_t>(s);
      ens.keys.push_back(key);
      XorScheme scheme;
      scheme.hypergraph.n = n * t;
      scheme.hypergraph.edges.assign(ens.m, filler);
      scheme.weights.assign(ens.m, Dyadic{});
      scheme.arity = key.arity();
      ens.schemes.push_back(std::move(scheme));
    }
  }

  std::vector<std::uint32_t> used(patterns);
  for (std::size_t i = 0; i < ens.m; ++i) {
    std::fill(used.begin(), used.end(), 0);
    const auto exp = lc.output_expansion(i);
    // Map iteration is (size, colex); one pattern fixes the size, so slots
    // within a pattern come out in colex order.
    for (const auto& [alpha, coeff] : exp.coefficients) {
      std::vector<std::int64_t> group(t, -1);
      std::vector<std::uint32_t> beta(t, 0);
      for (auto v : alpha) {
        const std::uint32_t g = v / w;
        const unsigned layer = g / n, bit = v % w;
        const std::int64_t j = g % n;
        if (group[layer] >= 0 && group[layer] != j)
          throw std::logic_error("output " + std::to_string(i) + ": character touches two groups of layer " +
                                 std::to_string(layer));
        group[layer] = j;
        beta[layer] |= 1u << bit;
      }
      std::uint64_t code = 0;
      Edge edge;
      for (unsigned l = 0; l < t; ++l) {
        code |= std::uint64_t{beta[l]} << (w * l);
        if (beta[l]) edge.push_back(static_cast<std::uint32_t>(l * n + group[l]));
      }
      const std::uint32_t slot = used[code]++;
      if (slot >= slots) throw std::logic_error("output " + std::to_string(i) + ": pattern slots exhausted");
      auto& scheme = ens.schemes[code * slots + slot];
      scheme.hypergraph.edges[i] = std::move(edge);
      scheme.weights[i] = coeff;
    }
  }
  return ens;
}

SignVector key_valuation(const LayeredCircuit& lc, const EnsembleKey& key, std::span<const Sign> layered_bits) {
  if (layered_bits.size() != lc.num_bits()) throw ValidationError("layered input length mismatch");
  SignVector y(lc.group_count(), 1);
  for (unsigned l = 0; l < lc.t(); ++l)
    for (std::uint32_t j = 0; j < lc.n(); ++j) {
      Sign s = 1;
      for (unsigned b = 0; b < lc.w(); ++b)
        if (key.beta[l] >> b & 1u) s = static_cast<Sign>(s * layered_bits[lc.bit_index(l, j, b)]);
      y[lc.group_index(l, j)] = s;
    }
  return y;
}

SignVector key_valuation_duplicate(const SchemeEnsemble& ens, const EnsembleKey& key,
                                   std::span<const std::uint32_t> x) {
  if (x.size() != ens.n) throw ValidationError("input length mismatch");
  SignVector y(ens.num_variables(), 1);
  for (unsigned l = 0; l < ens.t; ++l)
    for (std::uint32_t j = 0; j < ens.n; ++j) y[l * ens.n + j] = std::popcount(key.beta[l] & x[j]) & 1 ? -1 : 1;
  return y;
}

XorInstance attach_rhs(const XorScheme& scheme, std::span<const Sign> b) {
  if (b.size() != scheme.num_edges())
    throw ValidationError("target has length " + std::to_string(b.size()) + ", expected " +
                          std::to_string(scheme.num_edges()));
  XorInstance inst;
  inst.scheme = scheme;
  inst.rhs.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto& wt = inst.scheme.weights[i];
    Sign s = b[i];
    if (wt.sign() < 0) {
      wt = -wt;
      s = static_cast<Sign>(-s);
    }
    inst.rhs[i] = s;
  }
  return inst;
}

std::vector<XorInstance> attach_rhs(const SchemeEnsemble& ens, std::span<const Sign> b) {
  if (b.size() != ens.m)
    throw ValidationError("target has length " + std::to_string(b.size()) + ", expected m = " + std::to_string(ens.m));
  std::vector<XorInstance> out;
  out.reserve(ens.schemes.size());
  for (const auto& scheme : ens.schemes) out.push_back(attach_rhs(scheme, b));
  return out;
}

Rational JuntaSplit::top_mass() const {
  if (top.empty()) return Rational(0);
  Dyadic s;
  for (const auto& c : top) s += c.abs();
  return s.to_rational() / static_cast<std::int64_t>(top.size());
}

JuntaSplit nonadaptive_split(const Circuit& c) {
  validate_circuit(c);
  std::vector<std::string> issues;
  std::vector<FourierExpansion> expansions;
  expansions.reserve(c.m());
  unsigned t = 0;
  for (std::size_t i = 0; i < c.m(); ++i) {
    const auto* g = std::get_if<JuntaGate>(&c.gates[i]);
    if (!g) {
      issues.push_back("gate " + std::to_string(i) + ": not a junta");
      continue;
    }
    t = std::max(t, g->arity());
    expansions.push_back(expand_junta(*g, c.n));
    const auto cls = classify_parity(expansions.back());
    if (cls.kind != ParityKind::kOther)
      issues.push_back("gate " + std::to_string(i) + ": " + to_string(cls.kind) + " gate present");
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));

  JuntaSplit split;
  split.n = c.n;
  split.t = t;
  split.top.resize(c.m());
  const std::uint32_t full = (1u << t) - 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    const auto size = static_cast<unsigned>(std::popcount(mask));
    Edge filler(size);
    for (unsigned v = 0; v < size; ++v) filler[v] = v;
    JuntaSplit::Bucket bucket;
    bucket.mask = mask;
    bucket.scheme.hypergraph.n = c.n;
    bucket.scheme.hypergraph.edges.assign(c.m(), filler);
    bucket.scheme.weights.assign(c.m(), Dyadic{});
    bucket.scheme.arity = static_cast<int>(size);
    split.buckets.push_back(std::move(bucket));
  }

  for (std::size_t i = 0; i < c.m(); ++i) {
    const auto& g = std::get<JuntaGate>(c.gates[i]);
    const auto spectrum = junta_spectrum(g.table, g.arity());
    const std::uint32_t own_full = (1u << g.arity()) - 1;
    split.top[i] = spectrum[own_full];
    for (std::uint32_t mask = 0; mask < own_full; ++mask) {
      if ((mask & ~own_full) != 0) continue;
      Edge edge;
      for (unsigned p = 0; p < g.arity(); ++p)
        if (mask >> p & 1u) edge.push_back(g.inputs[p]);
      std::sort(edge.begin(), edge.end());
      auto& bucket = split.buckets[mask];
      bucket.scheme.hypergraph.edges[i] = std::move(edge);
      bucket.scheme.weights[i] = spectrum[mask];
    }
  }
  return split;
}

}  // namespace xorcert
