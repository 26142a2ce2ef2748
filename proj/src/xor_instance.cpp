#include "xorcert/xor_instance.hpp"

#include <map>

#include "xorcert/errors.hpp"

namespace xorcert {

XorScheme make_scheme(std::uint32_t n, std::vector<Edge> edges, int arity) {
  XorScheme s;
  s.hypergraph.n = n;
  s.weights.assign(edges.size(), Dyadic(1));
  s.hypergraph.edges = std::move(edges);
  s.arity = arity;
  return s;
}

XorInstance make_instance(XorScheme scheme, SignVector rhs) {
  XorInstance inst{std::move(scheme), std::move(rhs)};
  validate_instance(inst);
  return inst;
}

Sign character(std::span<const Sign> x, std::span<const std::uint32_t> edge) {
  Sign p = 1;
  for (auto v : edge) p = static_cast<Sign>(p * x[v]);
  return p;
}

Dyadic XorInstance::signed_sum(std::span<const Sign> x) const {
  Dyadic total;
  for (std::size_t c = 0; c < m(); ++c) {
    const int s = rhs[c] * character(x, edges()[c]);
    total += s > 0 ? weights()[c] : -weights()[c];
  }
  return total;
}

Rational XorInstance::value(std::span<const Sign> x) const {
  if (m() == 0) return Rational(0);
  return signed_sum(x).to_rational() / Rational(static_cast<std::int64_t>(m()));
}

Rational XorInstance::trivial_bound() const {
  if (m() == 0) return Rational(0);
  Dyadic total;
  for (const auto& w : weights()) total += w.abs();
  return total.to_rational() / Rational(static_cast<std::int64_t>(m()));
}

std::vector<std::string> instance_issues(const XorInstance& inst) {
  std::vector<std::string> issues;
  const auto& s = inst.scheme;
  const auto m = s.num_edges();
  if (s.weights.size() != m)
    issues.push_back("weights length " + std::to_string(s.weights.size()) + " != edge count " +
                     std::to_string(m));
  if (inst.rhs.size() != m)
    issues.push_back("rhs length " + std::to_string(inst.rhs.size()) + " != edge count " + std::to_string(m));
  if (s.arity < 0) issues.push_back("negative arity");
  for (std::size_t c = 0; c < m; ++c) {
    const auto& e = s.hypergraph.edges[c];
    const std::string tag = "edge " + std::to_string(c) + ": ";
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] >= s.hypergraph.n) issues.push_back(tag + "vertex " + std::to_string(e[j]) + " out of range");
      if (j > 0 && e[j] == e[j - 1]) issues.push_back(tag + "duplicate vertex " + std::to_string(e[j]));
      else if (j > 0 && e[j] < e[j - 1]) issues.push_back(tag + "vertices not sorted");
    }
    if (!s.mixed_arity && static_cast<int>(e.size()) != s.arity)
      issues.push_back(tag + "size " + std::to_string(e.size()) + " != arity " + std::to_string(s.arity));
    if (s.mixed_arity && static_cast<int>(e.size()) > s.arity)
      issues.push_back(tag + "size " + std::to_string(e.size()) + " exceeds declared arity");
    if (c < s.weights.size() && s.weights[c].abs() > Dyadic(1))
      issues.push_back(tag + "weight " + s.weights[c].to_string() + " out of range [-1, 1]");
    if (c < inst.rhs.size() && inst.rhs[c] != 1 && inst.rhs[c] != -1)
      issues.push_back(tag + "rhs " + std::to_string(inst.rhs[c]) + " is not +1 or -1");
  }
  return issues;
}

void validate_instance(const XorInstance& inst) {
  auto issues = instance_issues(inst);
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

std::vector<std::pair<int, XorInstance>> split_by_arity(const XorInstance& inst) {
  std::map<int, XorInstance> buckets;
  for (std::size_t c = 0; c < inst.m(); ++c) {
    const int a = static_cast<int>(inst.edges()[c].size());
    auto [it, fresh] = buckets.try_emplace(a);
    auto& b = it->second;
    if (fresh) {
      b.scheme.hypergraph.n = inst.n();
      b.scheme.arity = a;
    }
    b.scheme.hypergraph.edges.push_back(inst.edges()[c]);
    b.scheme.weights.push_back(inst.weights()[c]);
    b.rhs.push_back(inst.rhs[c]);
  }
  return {std::make_move_iterator(buckets.begin()), std::make_move_iterator(buckets.end())};
}

}  // namespace xorcert
