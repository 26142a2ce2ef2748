#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "xorcert/dyadic.hpp"
#include "xorcert/xor_instance.hpp"

namespace xorcert {

/// Arithmetic in GF(2^s) for 1 <= s <= 32, elements as the low s bits.
class BinaryField {
public:
  explicit BinaryField(unsigned degree);

  unsigned degree() const { return degree_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t size() const { return std::uint64_t{1} << degree_; }

  /// Irreducible polynomial used for degree s, including the x^s term.
  static std::uint64_t irreducible(unsigned degree);

private:
  unsigned degree_;
  std::uint64_t modulus_;
};

/// GF(2) inner product of two bit vectors packed in words.
inline unsigned inner_product(std::uint64_t a, std::uint64_t b) { return __builtin_popcountll(a & b) & 1u; }

enum class GeneratorKind { kUniform, kEpsBiased, kKwise, kKwiseEpsBiased };

const char* to_string(GeneratorKind kind);

/// Sample space over {±1}^m.
///  - uniform: the seed is the output.
///  - eps_biased: seed (a, s) in GF(2^f)^2, bit i = <a^i, s>.
///  - kwise: seed (c_0..c_{k-1}) in GF(2^s)^k, bit i = sum_j <c_j, i^j>.
///  - kwise_eps_biased: an eps_biased string of length k*s used as the
///    kwise seed.
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kUniform;
  std::size_t m = 0;
  unsigned k = 0;             // independence (kwise kinds)
  unsigned field_degree = 0;  // s for kwise kinds, f for eps_biased
  unsigned bias_degree = 0;   // f of the inner biased layer (kwise_eps_biased)

  unsigned seed_bits() const;
  /// Bias the construction guarantees for every parity it covers (all
  /// nonempty parities, or those of size <= k for kwise_eps_biased); zero for
  /// exact kinds.
  Dyadic bias_bound() const;
  /// Largest parity size the bias_bound covers (m unless kwise kinds).
  std::size_t bias_order() const;
  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

/// Throws ValidationError when parameters cannot realize the construction.
void validate_spec(const GeneratorSpec& spec);

GeneratorSpec uniform_spec(std::size_t m);
/// Smallest field meeting the requested bias: (m-1)/2^f <= eps.
GeneratorSpec eps_biased_spec(std::size_t m, double eps);
GeneratorSpec eps_biased_spec_with_degree(std::size_t m, unsigned field_degree);
/// Smallest field with 2^s >= m (and s >= 1) unless s is given.
GeneratorSpec kwise_spec(std::size_t m, unsigned k, unsigned field_degree = 0);
GeneratorSpec kwise_eps_biased_spec(std::size_t m, unsigned k, double eps);

/// Parses "kwise:k=8,m=1024,s=10", "biased:eps=2^-20,m=4096",
/// "biased:m=4,s=4", "kwise-biased:k=4,m=64,eps=0.01" (or explicit s, f),
/// "uniform:m=8".
GeneratorSpec parse_generator_spec(const std::string& text);
std::string format_generator_spec(const GeneratorSpec& spec);

/// Output on a seed given as seed_bits bits (0/1). Throws ValidationError on
/// a length mismatch.
SignVector sample(const GeneratorSpec& spec, std::span<const std::uint8_t> seed);
/// Output on the seed whose bit j is (seed >> j) & 1; needs seed_bits <= 64.
SignVector sample(const GeneratorSpec& spec, std::uint64_t seed);

/// Default enumeration cap on seed_bits.
inline constexpr unsigned kSeedBitsCap = 40;

/// 2^seed_bits; throws CapExceeded when seed_bits > cap.
std::uint64_t seed_count(const GeneratorSpec& spec, unsigned cap = kSeedBitsCap);

}  // namespace xorcert
