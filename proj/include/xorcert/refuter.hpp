#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xorcert/dyadic.hpp"
#include "xorcert/xor_instance.hpp"

namespace xorcert {

/// Level-r signed matrix of an even-arity instance, indexed by r-subsets of
/// [n] in colex order, stored as symmetric CSR.
struct KikuchiOperator {
  std::uint32_t n = 0;
  unsigned r = 0;
  unsigned k = 0;
  std::size_t m = 0;                   // edges that contributed (nonzero weight)
  std::uint64_t dim = 0;               // C(n, r)
  std::uint64_t edge_multiplier = 0;   // C(k, k/2) C(n-k, r-k/2)
  std::vector<std::uint64_t> row_start;
  std::vector<std::uint32_t> column;
  std::vector<Dyadic> value;           // accumulated w_C b_C
  std::vector<std::uint64_t> degree;   // D_SS: ordered pairs (C, T) in row S
  Rational average_degree;             // d = m * edge_multiplier / C(n, r)

  std::size_t nnz() const { return column.size(); }
  Dyadic entry(std::uint64_t row, std::uint64_t col) const;
  /// Gamma_SS = D_SS + d
  Rational gamma(std::uint64_t row) const;
  /// (x^{(r)})^T A x^{(r)} with x^{(r)}_S = prod_{i in S} x_i, exact.
  Dyadic quadratic_form(std::span<const Sign> x) const;
  std::uint64_t degree_trace() const;
};

/// Default cap on nonzero pairs m * edge_multiplier during a build.
inline constexpr std::uint64_t kMaxKikuchiPairs = 20'000'000;

/// Throws ValidationError for odd or mixed arity, r outside
/// [k/2, n - k/2]; CapExceeded past the dimension or pair caps. Zero-weight
/// edges are skipped.
KikuchiOperator build_kikuchi(const XorInstance& inst, unsigned r, std::uint64_t max_dimension = 1u << 22,
                              std::uint64_t max_pairs = kMaxKikuchiPairs);

/// Upper bound on ||B|| from trace(B^ell)^(1/ell), B = Gamma^-1/2 A Gamma^-1/2,
/// with outward-rounded interval arithmetic. ell is lowered (to at least 2,
/// which has a closed form) until dim * ell/2 * (nnz + dim) <= work_cap;
/// `used_ell` reports the power actually used. Throws ValidationError on odd
/// or zero ell.
double trace_certificate(const KikuchiOperator& op, unsigned ell, std::uint64_t work_cap = 100'000'000,
                         unsigned* used_ell = nullptr);

/// Upper bound on ||B|| from a dense symmetric eigendecomposition with a
/// rigorous residual margin. nullopt when dim exceeds max_dimension or the
/// solver fails.
std::optional<double> spectral_certificate(const KikuchiOperator& op, std::uint64_t max_dimension = 4096);

enum class RefuteMode { kTrace, kSpectral, kAuto };
const char* to_string(RefuteMode mode);
RefuteMode parse_refute_mode(const std::string& text);

struct RefuteParams {
  std::optional<unsigned> r;
  std::optional<unsigned> ell;
  RefuteMode mode = RefuteMode::kAuto;
  std::uint64_t max_dimension = 1u << 22;
  std::uint64_t spectral_max_dimension = 4096;
  std::uint64_t auto_spectral_max_dimension = 1024;
  std::uint64_t trace_work_cap = 100'000'000;
  /// Report min(bound, (1/m) sum |w|).
  bool clamp_trivial = false;
  /// Split each weight into +-2^-j unit pieces before certifying.
  bool split_unit_weights = false;
};

/// Machine-checkable upper bound on val (or on a correlation). Composite
/// certificates carry their parts in `breakdown`.
struct Certificate {
  std::string mode;  // trace, spectral, direct, parity, odd, mixed, junta, ensemble
  unsigned r = 0;
  unsigned ell = 0;
  double bound = 0.0;
  bool certified = true;
  std::string label;  // which sub-instance this part covers
  std::vector<Certificate> breakdown;
};

/// r = k/2, clipped to the valid range.
unsigned default_level(unsigned k, std::uint32_t n);
/// ell = 2 ceil(r ln n), at least 2.
unsigned default_power(unsigned r, std::uint32_t n);

/// Sound upper bound on val(inst) for any arity.
Certificate refute(const XorInstance& inst, const RefuteParams& params = {});

/// Cauchy-Schwarz pairing of an odd-arity instance: edges grouped by their
/// smallest vertex, cross pairs of a group bucketed by the size of their
/// symmetric difference.
struct OddReduction {
  Dyadic diag_term;       // sum of w^2 plus cross pairs with equal edges
  std::size_t groups = 0;
  std::size_t m = 0;
  std::vector<XorInstance> buckets;  // even arities, increasing
};

/// Throws ValidationError on even or mixed arity.
OddReduction odd_to_even(const XorInstance& inst);

/// Splits weights into units of size 2^-j (j = largest log denominator),
/// with rhs signs absorbing weight signs.
XorInstance split_into_units(const XorInstance& inst);

}  // namespace xorcert
