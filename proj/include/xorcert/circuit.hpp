#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <variant>
#include <vector>

#include "xorcert/fourier.hpp"
#include "xorcert/gates.hpp"
#include "xorcert/xor_instance.hpp"

namespace xorcert {

using Gate = std::variant<JuntaGate, WordDecisionTree>;

/// Multi-output map Sigma^n -> {±1}^m with |Sigma| = 2^w; every output is a
/// t-junta (w = 1) or a t-query word decision tree.
struct Circuit {
  std::uint32_t n = 0;
  unsigned w = 1;
  unsigned t = 0;
  std::vector<Gate> gates;

  std::size_t m() const { return gates.size(); }
  bool all_juntas() const;
  bool all_trees() const;
  friend bool operator==(const Circuit&, const Circuit&) = default;
};

using Symbols = std::vector<std::uint32_t>;

/// Throws ValidationError listing every gate that breaks (n, w, t).
void validate_circuit(const Circuit& c);

/// Gate-by-gate evaluation; trees are followed adaptively. Throws
/// ValidationError on a wrong-length input or a symbol >= 2^w.
SignVector eval_circuit(const Circuit& c, std::span<const std::uint32_t> x);

/// Output of one gate on a symbol lookup.
Sign eval_gate(const Gate& g, unsigned w, const std::function<std::uint32_t(std::uint32_t)>& symbol);

/// Layer-respecting version of a tree circuit over {±1}^(w n t): the t'-th
/// query of every tree to symbol j reads group j of layer t'. Junta gates are
/// first rewritten as Boolean trees.
struct LayeredCircuit {
  Circuit base;  // all gates are trees

  std::uint32_t n() const { return base.n; }
  unsigned w() const { return base.w; }
  unsigned t() const { return base.t; }
  std::uint32_t num_bits() const { return base.n * base.w * base.t; }
  std::uint32_t group_count() const { return base.n * base.t; }

  /// Index of bit `bit` of group (layer, j).
  std::uint32_t bit_index(unsigned layer, std::uint32_t j, unsigned bit) const {
    return (layer * base.n + j) * base.w + bit;
  }
  /// Group (layer, j) as a flat index layer * n + j.
  std::uint32_t group_index(unsigned layer, std::uint32_t j) const { return layer * base.n + j; }
  std::uint32_t group_of_bit(std::uint32_t bit_var) const { return bit_var / base.w; }

  /// Fourier expansion of output i over the w n t layered bits.
  FourierExpansion output_expansion(std::size_t i) const;
};

LayeredCircuit to_layered(const Circuit& c);

/// Evaluation on an arbitrary layered input (w n t signs).
SignVector eval_layered(const LayeredCircuit& lc, std::span<const Sign> layered_bits);

/// Evaluation on the duplicated embedding of x (t identical layers). The
/// layered string is never materialized.
SignVector eval_layered_duplicate(const LayeredCircuit& lc, std::span<const std::uint32_t> x);

/// Materialized duplicated embedding, for tests and oracles.
SignVector duplicate_layers(const Circuit& c, std::span<const std::uint32_t> x);

/// Seeded random circuits for test suites. Junta gates draw `t` distinct
/// inputs and a uniform table. Trees have full depth t with distinct
/// queries along each path (needs n >= t) and uniform leaves.
Circuit random_junta_circuit(std::uint32_t n, unsigned t, std::size_t m, std::mt19937_64& rng);
Circuit random_tree_circuit(std::uint32_t n, unsigned w, unsigned t, std::size_t m, std::mt19937_64& rng);
JuntaGate random_junta(std::uint32_t n, unsigned t, std::mt19937_64& rng);
WordDecisionTree random_tree(std::uint32_t n, unsigned w, unsigned t, std::mt19937_64& rng);

/// All inputs of Sigma^n in increasing order (symbol 0 of the input varies
/// fastest). Throws CapExceeded past 2^max_bits inputs.
void for_each_input(const Circuit& c, unsigned max_bits, const std::function<void(const Symbols&)>& visit);

}  // namespace xorcert
