#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "xorcert/dyadic.hpp"

namespace xorcert {

/// A ±1 value. Bit 0 maps to +1 and bit 1 maps to -1 everywhere in this
/// library.
using Sign = std::int8_t;
using SignVector = std::vector<Sign>;

inline Sign sign_of_bit(unsigned bit) { return bit ? Sign{-1} : Sign{1}; }
inline unsigned bit_of_sign(Sign s) { return s < 0 ? 1u : 0u; }

using Edge = std::vector<std::uint32_t>;

/// Edges are strictly sorted vertex lists; parallel edges are distinct
/// entries (edge identity is position).
struct Hypergraph {
  std::uint32_t n = 0;
  std::vector<Edge> edges;

  std::size_t size() const { return edges.size(); }
  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

/// Weighted constraint topology with the right-hand side left open.
struct XorScheme {
  Hypergraph hypergraph;
  std::vector<Dyadic> weights;  // one per edge, each in [-1, 1]
  int arity = 0;                // k; for mixed-arity schemes the largest edge size
  bool mixed_arity = false;

  std::size_t num_edges() const { return hypergraph.size(); }
  friend bool operator==(const XorScheme&, const XorScheme&) = default;
};

/// Unit-weight scheme over the given edges.
XorScheme make_scheme(std::uint32_t n, std::vector<Edge> edges, int arity);

struct XorInstance {
  XorScheme scheme;
  SignVector rhs;  // one ±1 per edge

  std::uint32_t n() const { return scheme.hypergraph.n; }
  std::size_t m() const { return scheme.num_edges(); }
  const std::vector<Edge>& edges() const { return scheme.hypergraph.edges; }
  const std::vector<Dyadic>& weights() const { return scheme.weights; }

  /// m * psi(x) = sum_C w_C b_C prod_{i in e_C} x_i, exact.
  Dyadic signed_sum(std::span<const Sign> x) const;
  /// psi(x) = signed_sum(x) / m. Zero for an instance without edges.
  Rational value(std::span<const Sign> x) const;
  /// (1/m) sum_C |w_C|, a bound every assignment respects.
  Rational trivial_bound() const;

  friend bool operator==(const XorInstance&, const XorInstance&) = default;
};

XorInstance make_instance(XorScheme scheme, SignVector rhs);

/// Every violated invariant, each tagged with its edge index. Empty when the
/// instance is well formed.
std::vector<std::string> instance_issues(const XorInstance& inst);

/// Throws ValidationError listing every issue from instance_issues.
void validate_instance(const XorInstance& inst);

/// Instances split by edge size: returns (arity, sub-instance) pairs in
/// increasing arity. Sub-instances keep n and their own edge count.
std::vector<std::pair<int, XorInstance>> split_by_arity(const XorInstance& inst);

/// Product of x over the edge.
Sign character(std::span<const Sign> x, std::span<const std::uint32_t> edge);

}  // namespace xorcert
