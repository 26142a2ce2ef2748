#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "xorcert/dyadic.hpp"
#include "xorcert/gates.hpp"

namespace xorcert {

/// Sorted variable indices; x_alpha = prod_{i in alpha} x_i.
using Character = std::vector<std::uint32_t>;

/// Orders characters by size, then colexicographically.
struct CharacterOrder {
  bool operator()(const Character& a, const Character& b) const;
};

/// Multiplication of characters: symmetric difference of the index sets.
Character character_product(const Character& a, const Character& b);

struct FourierExpansion {
  std::uint32_t n_vars = 0;
  std::map<Character, Dyadic, CharacterOrder> coefficients;  // nonzero entries only

  Dyadic coefficient(const Character& alpha) const;
  /// sum_alpha coeff^2
  Dyadic squared_norm() const;
  /// sum_alpha |coeff|
  Dyadic l1_norm() const;
  unsigned degree() const;
  /// Evaluate at a ±1 point.
  Dyadic evaluate(const std::vector<std::int8_t>& x) const;

  void add(const Character& alpha, const Dyadic& value);
  friend bool operator==(const FourierExpansion&, const FourierExpansion&) = default;
};

/// Hard cap on junta arity for the exact transform.
inline constexpr unsigned kMaxJuntaArity = 16;

/// Coefficients of a truth table indexed by position mask: entry[mask] is the
/// coefficient of prod_{j in mask} x_{inputs[j]}. Exact; multiples of 2^-t.
std::vector<Dyadic> junta_spectrum(const std::vector<std::uint8_t>& table, unsigned arity);

/// Expansion over the gate's global input indices. Throws ValidationError
/// when the table length is not 2^|inputs|.
FourierExpansion expand_junta(const JuntaGate& gate, std::uint32_t n_vars);

/// Expansion of a Boolean (w = 1) tree by the restriction recursion
/// g = (1+x_j)/2 g|_{x_j=+1} + (1-x_j)/2 g|_{x_j=-1}.
/// Throws ValidationError when w != 1 or depth exceeds max_depth.
FourierExpansion expand_decision_tree(const WordDecisionTree& tree, std::uint32_t n_vars, unsigned max_depth);

/// Word-tree expansion with caller-chosen bit variables: the bit b of the
/// symbol read by a query of symbol j at depth d is variable
/// bit_var(d, j, b).
using BitVariableMap = std::function<std::uint32_t(unsigned depth, std::uint32_t symbol, unsigned bit)>;
FourierExpansion expand_word_tree(const WordDecisionTree& tree, std::uint32_t n_vars, const BitVariableMap& bit_var);

/// sum_{|alpha| = level} |coeff_alpha|.
Dyadic level_weight(const FourierExpansion& exp, unsigned level);

enum class ParityKind { kXor, kNxor, kOther };

struct ParityClass {
  ParityKind kind = ParityKind::kOther;
  Character character;  // the parity's support when kind != kOther
};

/// XOR iff the expansion is exactly {alpha: +1}, NXOR iff exactly
/// {alpha: -1}. For OTHER the top coefficient on the union of characters is
/// checked against 1 - 2^(1-|support|). Throws ValidationError when
/// Parseval fails (not a ±1-valued function).
ParityClass classify_parity(const FourierExpansion& exp);

const char* to_string(ParityKind kind);

}  // namespace xorcert
