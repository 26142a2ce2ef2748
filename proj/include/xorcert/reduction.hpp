#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "xorcert/circuit.hpp"
#include "xorcert/xor_instance.hpp"

namespace xorcert {

/// One scheme of the ensemble: a per-layer bit pattern (beta[layer] is a
/// mask over the w bits of a group) and a slot in [0, 2^(tw)).
struct EnsembleKey {
  std::vector<std::uint32_t> beta;
  std::uint32_t slot = 0;

  /// Number of layers with a nonempty pattern.
  int arity() const;
  /// sum_l beta[l] << (w l)
  std::uint64_t beta_code(unsigned w) const;
  friend bool operator==(const EnsembleKey&, const EnsembleKey&) = default;
};

/// 4^(tw) weighted schemes over the n t valuation variables y_{layer, j}
/// (index layer * n + j). Scheme edge i always comes from output i.
struct SchemeEnsemble {
  std::uint32_t n = 0;
  unsigned w = 1;
  unsigned t = 0;
  std::size_t m = 0;
  std::vector<EnsembleKey> keys;   // key id = beta_code * 2^(tw) + slot
  std::vector<XorScheme> schemes;  // parallel to keys

  std::uint32_t num_variables() const { return n * t; }
  std::size_t slots_per_pattern() const { return std::size_t{1} << (w * t); }
  std::size_t key_id(const EnsembleKey& key) const;
};

/// Assigns every nonzero layered character of every output to the key of its
/// bit pattern, slots in colex order. Throws std::logic_error if a character
/// touches two groups of one layer or a pattern overflows its slots.
SchemeEnsemble group_characters(const LayeredCircuit& lc);

/// Valuation of the key's variables on a layered input:
/// y_{layer, j} = prod_{b in beta[layer]} xt_{layer, j, b} (+1 on empty layers).
SignVector key_valuation(const LayeredCircuit& lc, const EnsembleKey& key, std::span<const Sign> layered_bits);

/// Same valuation on the duplicated embedding of x.
SignVector key_valuation_duplicate(const SchemeEnsemble& ens, const EnsembleKey& key, std::span<const std::uint32_t> x);

/// One instance per key with b attached; negative weights are made positive
/// by flipping the matching rhs sign. Throws ValidationError on |b| != m.
std::vector<XorInstance> attach_rhs(const SchemeEnsemble& ens, std::span<const Sign> b);

/// Per-gate positional decomposition of a junta circuit with no parity gates.
/// Bucket `mask` (a proper positional subset of a gate's inputs) holds an
/// |mask|-XOR scheme over [n] with one edge per gate: the inputs at those
/// positions, weighted by the gate's coefficient. Gates too short for a
/// mask contribute a zero-weight filler edge. The coefficient on each gate's
/// full support is kept aside in `top`.
struct JuntaSplit {
  std::uint32_t n = 0;
  unsigned t = 0;  // largest gate arity
  struct Bucket {
    std::uint32_t mask = 0;
    XorScheme scheme;
  };
  std::vector<Bucket> buckets;  // every mask in [0, 2^t - 1), increasing
  std::vector<Dyadic> top;      // per gate

  /// (1/m) sum_i |top_i|
  Rational top_mass() const;
};

/// Throws ValidationError naming every gate that is XOR/NXOR (constants
/// included) or not a junta.
JuntaSplit nonadaptive_split(const Circuit& c);

/// Sign-normalized instance of one bucket against target bits b.
XorInstance attach_rhs(const XorScheme& scheme, std::span<const Sign> b);

}  // namespace xorcert
