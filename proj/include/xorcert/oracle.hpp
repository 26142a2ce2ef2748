#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "xorcert/circuit.hpp"
#include "xorcert/dyadic.hpp"
#include "xorcert/prg.hpp"
#include "xorcert/reduction.hpp"
#include "xorcert/xor_instance.hpp"

namespace xorcert::oracle {

/// Enumeration caps (bits of the enumerated space).
inline constexpr unsigned kMaxValVariables = 24;
inline constexpr unsigned kMaxInputBits = 24;
inline constexpr unsigned kMaxAuditOutputs = 16;
inline constexpr unsigned kMaxAuditSeedBits = 20;

/// max_x |psi(x)| by Gray-code enumeration over the variables that occur in
/// some edge. Throws CapExceeded above kMaxValVariables of them.
Rational brute_val(const XorInstance& inst);

/// Whether some input maps to y.
bool brute_range_member(const Circuit& c, std::span<const Sign> y);

/// min_x of the fraction of outputs where C(x) and b differ.
Rational brute_min_distance(const Circuit& c, std::span<const Sign> b);

/// All distinct outputs of C, sorted.
std::vector<SignVector> brute_range(const Circuit& c);

/// Largest |E[chi_I]| over nonempty I with |I| <= max_order, over all seeds.
Dyadic brute_bias(const GeneratorSpec& spec, std::size_t max_order);
inline Dyadic brute_bias(const GeneratorSpec& spec) { return brute_bias(spec, spec.m); }

/// Largest |P[x_I = a] - 2^-k| over |I| = k and all patterns a.
Dyadic brute_independence(const GeneratorSpec& spec, unsigned k);

/// m <C(x), b> - m sum_keys psi_key(y_key(x)), exact; zero when the
/// decomposition is right.
Dyadic check_decomposition(const Circuit& c, const SchemeEnsemble& ens, std::span<const std::uint32_t> x,
                           std::span<const Sign> b);
/// Builds the ensemble first.
Dyadic check_decomposition(const Circuit& c, std::span<const std::uint32_t> x, std::span<const Sign> b);
/// Same identity on an arbitrary layered input.
Dyadic check_layered_decomposition(const LayeredCircuit& lc, const SchemeEnsemble& ens,
                                   std::span<const Sign> layered_bits, std::span<const Sign> b);

/// bound >= value, compared exactly.
bool bound_dominates(double bound, const Rational& value);

}  // namespace xorcert::oracle
