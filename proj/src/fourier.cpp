#include "xorcert/fourier.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "xorcert/errors.hpp"

namespace xorcert {

bool CharacterOrder::operator()(const Character& a, const Character& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

Character character_product(const Character& a, const Character& b) {
  Character out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Dyadic FourierExpansion::coefficient(const Character& alpha) const {
  auto it = coefficients.find(alpha);
  return it == coefficients.end() ? Dyadic{} : it->second;
}

Dyadic FourierExpansion::squared_norm() const {
  Dyadic s;
  for (const auto& [_, c] : coefficients) s += c * c;
  return s;
}

Dyadic FourierExpansion::l1_norm() const {
  Dyadic s;
  for (const auto& [_, c] : coefficients) s += c.abs();
  return s;
}

unsigned FourierExpansion::degree() const {
  unsigned d = 0;
  for (const auto& [a, _] : coefficients) d = std::max(d, static_cast<unsigned>(a.size()));
  return d;
}

Dyadic FourierExpansion::evaluate(const std::vector<std::int8_t>& x) const {
  Dyadic s;
  for (const auto& [a, c] : coefficients) {
    int chi = 1;
    for (auto v : a) chi *= x[v];
    s += chi > 0 ? c : -c;
  }
  return s;
}

void FourierExpansion::add(const Character& alpha, const Dyadic& value) {
  if (value.is_zero()) return;
  auto [it, fresh] = coefficients.try_emplace(alpha, value);
  if (fresh) return;
  it->second += value;
  if (it->second.is_zero()) coefficients.erase(it);
}

std::vector<Dyadic> junta_spectrum(const std::vector<std::uint8_t>& table, unsigned arity) {
  if (arity > kMaxJuntaArity) throw ValidationError("junta arity " + std::to_string(arity) + " above cap");
  const std::size_t size = std::size_t{1} << arity;
  if (table.size() != size)
    throw ValidationError("truth table length " + std::to_string(table.size()) + " != 2^" + std::to_string(arity));
  // Integer Walsh-Hadamard transform of the ±1 table; exact.
  std::vector<std::int64_t> a(size);
  for (std::size_t i = 0; i < size; ++i) {
    if (table[i] > 1) throw ValidationError("truth table entry " + std::to_string(i) + " is not 0/1");
    a[i] = table[i] ? -1 : 1;
  }
  for (std::size_t h = 1; h < size; h <<= 1)
    for (std::size_t i = 0; i < size; i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) {
        const auto u = a[j], v = a[j + h];
        a[j] = u + v;
        a[j + h] = u - v;
      }
  std::vector<Dyadic> out(size);
  for (std::size_t i = 0; i < size; ++i) out[i] = Dyadic(a[i], arity);
  return out;
}

FourierExpansion expand_junta(const JuntaGate& gate, std::uint32_t n_vars) {
  const auto spectrum = junta_spectrum(gate.table, gate.arity());
  FourierExpansion exp{n_vars, {}};
  for (std::size_t mask = 0; mask < spectrum.size(); ++mask) {
    if (spectrum[mask].is_zero()) continue;
    Character alpha;
    for (unsigned j = 0; j < gate.arity(); ++j)
      if (mask >> j & 1) alpha.push_back(gate.inputs[j]);
    std::sort(alpha.begin(), alpha.end());
    exp.add(alpha, spectrum[mask]);
  }
  return exp;
}

namespace {

FourierExpansion expand_node(const WordDecisionTree& tree, std::uint32_t node_id, unsigned depth,
                             std::uint32_t n_vars, const BitVariableMap& bit_var) {
  const auto& node = tree.nodes.at(node_id);
  FourierExpansion out{n_vars, {}};
  if (node.is_leaf()) {
    out.add({}, Dyadic(node.leaf ? -1 : 1));
    return out;
  }
  const unsigned symbols = 1u << tree.w;
  std::vector<FourierExpansion> sub;
  sub.reserve(symbols);
  for (unsigned s = 0; s < symbols; ++s)
    sub.push_back(expand_node(tree, node.children.at(s), depth + 1, n_vars, bit_var));

  const auto symbol = static_cast<std::uint32_t>(node.query);
  // Indicator of x_G = s expands to 2^-w sum_beta chi_beta(s) x_{G,beta}.
  for (unsigned beta = 0; beta < symbols; ++beta) {
    Character group_char;
    for (unsigned b = 0; b < tree.w; ++b)
      if (beta >> b & 1) group_char.push_back(bit_var(depth, symbol, b));
    std::sort(group_char.begin(), group_char.end());
    FourierExpansion part{n_vars, {}};
    for (unsigned s = 0; s < symbols; ++s) {
      const bool negate = std::popcount(beta & s) & 1;
      for (const auto& [alpha, c] : sub[s].coefficients) part.add(alpha, negate ? -c : c);
    }
    for (const auto& [alpha, c] : part.coefficients)
      out.add(character_product(group_char, alpha), c * Dyadic::pow2_inv(tree.w));
  }
  return out;
}

}  // namespace

FourierExpansion expand_word_tree(const WordDecisionTree& tree, std::uint32_t n_vars, const BitVariableMap& bit_var) {
  if (tree.nodes.empty()) throw ValidationError("decision tree has no nodes");
  return expand_node(tree, 0, 0, n_vars, bit_var);
}

FourierExpansion expand_decision_tree(const WordDecisionTree& tree, std::uint32_t n_vars, unsigned max_depth) {
  if (tree.w != 1) throw ValidationError("expand_decision_tree needs Boolean queries (w = 1)");
  if (tree.depth() > max_depth)
    throw ValidationError("tree depth " + std::to_string(tree.depth()) + " exceeds " + std::to_string(max_depth));
  return expand_word_tree(tree, n_vars, [](unsigned, std::uint32_t j, unsigned) { return j; });
}

Dyadic level_weight(const FourierExpansion& exp, unsigned level) {
  Dyadic s;
  for (const auto& [a, c] : exp.coefficients)
    if (a.size() == level) s += c.abs();
  return s;
}

ParityClass classify_parity(const FourierExpansion& exp) {
  if (exp.squared_norm() != Dyadic(1))
    throw ValidationError("expansion is not ±1-valued: sum of squares is " + exp.squared_norm().to_string());
  if (exp.coefficients.size() == 1) {
    const auto& [alpha, c] = *exp.coefficients.begin();
    return {c == Dyadic(1) ? ParityKind::kXor : ParityKind::kNxor, alpha};
  }
  Character support;
  for (const auto& [a, _] : exp.coefficients) {
    Character merged;
    std::set_union(support.begin(), support.end(), a.begin(), a.end(), std::back_inserter(merged));
    support = std::move(merged);
  }
  const auto t = static_cast<unsigned>(support.size());
  const Dyadic limit = Dyadic(1) - Dyadic::pow2_inv(t - 1);
  if (exp.coefficient(support).abs() > limit)
    throw std::logic_error("non-parity junta with top coefficient above 1 - 2^(1-t)");
  return {ParityKind::kOther, {}};
}

const char* to_string(ParityKind kind) {
  switch (kind) {
    case ParityKind::kXor: return "XOR";
    case ParityKind::kNxor: return "NXOR";
    case ParityKind::kOther: return "OTHER";
  }
  return "?";
}

unsigned WordDecisionTree::depth() const {
  if (nodes.empty()) return 0;
  unsigned best = 0;
  std::vector<std::pair<std::uint32_t, unsigned>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [id, d] = stack.back();
    stack.pop_back();
    const auto& node = nodes.at(id);
    if (node.is_leaf()) {
      best = std::max(best, d);
      continue;
    }
    for (auto c : node.children) stack.emplace_back(c, d + 1);
  }
  return best;
}

WordDecisionTree WordDecisionTree::leaf(unsigned w, std::uint8_t bit) {
  WordDecisionTree t;
  t.w = w;
  t.nodes.push_back(Node{-1, bit, {}});
  return t;
}

WordDecisionTree junta_to_tree(const JuntaGate& gate) {
  WordDecisionTree tree;
  tree.w = 1;
  // Build breadth-first; at depth d the partial index covers inputs 0..d-1.
  struct Pending {
    std::uint32_t id;
    unsigned depth;
    std::size_t index;
  };
  tree.nodes.emplace_back();
  std::vector<Pending> work{{0, 0, 0}};
  while (!work.empty()) {
    const Pending p = work.back();
    work.pop_back();
    if (p.depth == gate.arity()) {
      tree.nodes[p.id].query = -1;
      tree.nodes[p.id].leaf = gate.table.at(p.index);
      continue;
    }
    tree.nodes[p.id].query = gate.inputs[p.depth];
    for (unsigned bit = 0; bit < 2; ++bit) {
      const auto child = static_cast<std::uint32_t>(tree.nodes.size());
      tree.nodes.emplace_back();
      tree.nodes[p.id].children.push_back(child);
      work.push_back({child, p.depth + 1, p.index | (std::size_t{bit} << p.depth)});
    }
  }
  return tree;
}

}  // namespace xorcert
