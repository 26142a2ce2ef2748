#include "xorcert/circuit.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "xorcert/errors.hpp"

namespace xorcert {

bool Circuit::all_juntas() const {
  return std::all_of(gates.begin(), gates.end(), [](const Gate& g) { return std::holds_alternative<JuntaGate>(g); });
}

bool Circuit::all_trees() const {
  return std::all_of(gates.begin(), gates.end(),
                     [](const Gate& g) { return std::holds_alternative<WordDecisionTree>(g); });
}

namespace {

void check_junta(const JuntaGate& g, const Circuit& c, const std::string& tag, std::vector<std::string>& issues) {
  if (c.w != 1) issues.push_back(tag + "junta gates need w = 1");
  if (g.arity() > c.t) issues.push_back(tag + "junta arity " + std::to_string(g.arity()) + " exceeds t");
  if (g.arity() > kMaxJuntaArity) issues.push_back(tag + "junta arity above cap");
  else if (g.table.size() != (std::size_t{1} << g.arity()))
    issues.push_back(tag + "truth table length " + std::to_string(g.table.size()) + " != 2^" +
                     std::to_string(g.arity()));
  std::set<std::uint32_t> seen;
  for (auto v : g.inputs) {
    if (v >= c.n) issues.push_back(tag + "input " + std::to_string(v) + " out of range");
    if (!seen.insert(v).second) issues.push_back(tag + "duplicate input " + std::to_string(v));
  }
  for (auto b : g.table)
    if (b > 1) {
      issues.push_back(tag + "truth table entry is not 0/1");
      break;
    }
}

void check_tree(const WordDecisionTree& tree, const Circuit& c, const std::string& tag,
                std::vector<std::string>& issues) {
  if (tree.w != c.w) issues.push_back(tag + "tree word size " + std::to_string(tree.w) + " != w");
  if (tree.nodes.empty()) {
    issues.push_back(tag + "tree has no nodes");
    return;
  }
  const std::size_t fanout = std::size_t{1} << c.w;
  // Walk from the root; every node must be reached exactly once.
  std::vector<std::uint8_t> visited(tree.nodes.size(), 0);
  std::vector<std::pair<std::uint32_t, unsigned>> stack{{0, 0}};
  bool structural_ok = true;
  while (!stack.empty() && structural_ok) {
    auto [id, depth] = stack.back();
    stack.pop_back();
    if (id >= tree.nodes.size() || visited[id]) {
      issues.push_back(tag + "node " + std::to_string(id) + " missing or shared");
      structural_ok = false;
      break;
    }
    visited[id] = 1;
    const auto& node = tree.nodes[id];
    if (node.is_leaf()) {
      if (node.leaf > 1) issues.push_back(tag + "leaf value is not 0/1");
      continue;
    }
    if (depth + 1 > c.t) {
      issues.push_back(tag + "tree depth exceeds t = " + std::to_string(c.t));
      structural_ok = false;
      break;
    }
    if (static_cast<std::uint64_t>(node.query) >= c.n)
      issues.push_back(tag + "query " + std::to_string(node.query) + " out of range");
    if (node.children.size() != fanout) {
      issues.push_back(tag + "internal node with " + std::to_string(node.children.size()) + " children, expected " +
                       std::to_string(fanout));
      structural_ok = false;
      break;
    }
    for (auto ch : node.children) stack.emplace_back(ch, depth + 1);
  }
}

}  // namespace

void validate_circuit(const Circuit& c) {
  std::vector<std::string> issues;
  if (c.w == 0 || c.w > 16) issues.push_back("word size w must be in [1, 16]");
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const std::string tag = "gate " + std::to_string(i) + ": ";
    std::visit(
        [&](const auto& g) {
          using G = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<G, JuntaGate>) check_junta(g, c, tag, issues);
          else check_tree(g, c, tag, issues);
        },
        c.gates[i]);
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

Sign eval_gate(const Gate& g, unsigned w, const std::function<std::uint32_t(std::uint32_t)>& symbol) {
  if (const auto* j = std::get_if<JuntaGate>(&g)) {
    std::size_t idx = 0;
    for (unsigned p = 0; p < j->arity(); ++p) idx |= std::size_t{symbol(j->inputs[p]) & 1u} << p;
    return sign_of_bit(j->table[idx]);
  }
  const auto& tree = std::get<WordDecisionTree>(g);
  (void)w;
  std::uint32_t id = 0;
  while (!tree.nodes[id].is_leaf()) id = tree.nodes[id].children[symbol(static_cast<std::uint32_t>(tree.nodes[id].query))];
  return sign_of_bit(tree.nodes[id].leaf);
}

SignVector eval_circuit(const Circuit& c, std::span<const std::uint32_t> x) {
  if (x.size() != c.n)
    throw ValidationError("input length " + std::to_string(x.size()) + " != n = " + std::to_string(c.n));
  const std::uint32_t limit = 1u << c.w;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (x[j] >= limit) throw ValidationError("symbol " + std::to_string(x[j]) + " at position " + std::to_string(j) + " out of range");
  SignVector out(c.m());
  const auto lookup = [&](std::uint32_t j) { return x[j]; };
  for (std::size_t i = 0; i < c.m(); ++i) out[i] = eval_gate(c.gates[i], c.w, lookup);
  return out;
}

LayeredCircuit to_layered(const Circuit& c) {
  validate_circuit(c);
  LayeredCircuit lc;
  lc.base.n = c.n;
  lc.base.w = c.w;
  lc.base.t = c.t;
  lc.base.gates.reserve(c.m());
  for (const auto& g : c.gates) {
    if (const auto* j = std::get_if<JuntaGate>(&g)) lc.base.gates.emplace_back(junta_to_tree(*j));
    else lc.base.gates.push_back(g);
  }
  return lc;
}

FourierExpansion LayeredCircuit::output_expansion(std::size_t i) const {
  const auto& tree = std::get<WordDecisionTree>(base.gates.at(i));
  return expand_word_tree(tree, num_bits(), [this](unsigned depth, std::uint32_t j, unsigned bit) {
    return bit_index(depth, j, bit);
  });
}

namespace {

Sign eval_layered_tree(const WordDecisionTree& tree, const std::function<std::uint32_t(unsigned, std::uint32_t)>& symbol) {
  std::uint32_t id = 0;
  unsigned depth = 0;
  while (!tree.nodes[id].is_leaf()) {
    id = tree.nodes[id].children[symbol(depth, static_cast<std::uint32_t>(tree.nodes[id].query))];
    ++depth;
  }
  return sign_of_bit(tree.nodes[id].leaf);
}

}  // namespace

SignVector eval_layered(const LayeredCircuit& lc, std::span<const Sign> layered_bits) {
  if (layered_bits.size() != lc.num_bits())
    throw ValidationError("layered input has length " + std::to_string(layered_bits.size()) + ", expected " +
                          std::to_string(lc.num_bits()));
  const auto symbol = [&](unsigned layer, std::uint32_t j) {
    std::uint32_t s = 0;
    for (unsigned b = 0; b < lc.w(); ++b) s |= bit_of_sign(layered_bits[lc.bit_index(layer, j, b)]) << b;
    return s;
  };
  SignVector out(lc.base.m());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = eval_layered_tree(std::get<WordDecisionTree>(lc.base.gates[i]), symbol);
  return out;
}

SignVector eval_layered_duplicate(const LayeredCircuit& lc, std::span<const std::uint32_t> x) {
  if (x.size() != lc.n()) throw ValidationError("input length mismatch");
  const auto symbol = [&](unsigned, std::uint32_t j) { return x[j]; };
  SignVector out(lc.base.m());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = eval_layered_tree(std::get<WordDecisionTree>(lc.base.gates[i]), symbol);
  return out;
}

SignVector duplicate_layers(const Circuit& c, std::span<const std::uint32_t> x) {
  SignVector bits(static_cast<std::size_t>(c.n) * c.w * c.t);
  for (unsigned layer = 0; layer < c.t; ++layer)
    for (std::uint32_t j = 0; j < c.n; ++j)
      for (unsigned b = 0; b < c.w; ++b) bits[(layer * c.n + j) * c.w + b] = sign_of_bit(x[j] >> b & 1u);
  return bits;
}

JuntaGate random_junta(std::uint32_t n, unsigned t, std::mt19937_64& rng) {
  JuntaGate g;
  std::vector<std::uint32_t> pool(n);
  for (std::uint32_t v = 0; v < n; ++v) pool[v] = v;
  for (unsigned p = 0; p < t; ++p) {
    std::uniform_int_distribution<std::uint32_t> pick(p, n - 1);
    std::swap(pool[p], pool[pick(rng)]);
    g.inputs.push_back(pool[p]);
  }
  std::bernoulli_distribution coin(0.5);
  g.table.resize(std::size_t{1} << t);
  for (auto& b : g.table) b = coin(rng) ? 1 : 0;
  return g;
}

WordDecisionTree random_tree(std::uint32_t n, unsigned w, unsigned t, std::mt19937_64& rng) {
  if (n < t) throw ValidationError("random_tree needs n >= t for distinct queries per path");
  WordDecisionTree tree;
  tree.w = w;
  std::bernoulli_distribution coin(0.5);
  struct Pending {
    std::uint32_t id;
    std::vector<std::uint32_t> path;
  };
  tree.nodes.emplace_back();
  std::vector<Pending> work{{0, {}}};
  while (!work.empty()) {
    Pending p = std::move(work.back());
    work.pop_back();
    if (p.path.size() == t) {
      tree.nodes[p.id].leaf = coin(rng) ? 1 : 0;
      continue;
    }
    std::uniform_int_distribution<std::uint32_t> pick(0, n - 1 - static_cast<std::uint32_t>(p.path.size()));
    std::uint32_t q = pick(rng);
    // q-th index not on the path
    std::vector<std::uint32_t> sorted = p.path;
    std::sort(sorted.begin(), sorted.end());
    for (auto used : sorted)
      if (used <= q) ++q;
    tree.nodes[p.id].query = q;
    p.path.push_back(q);
    for (std::uint32_t s = 0; s < (1u << w); ++s) {
      const auto child = static_cast<std::uint32_t>(tree.nodes.size());
      tree.nodes.emplace_back();
      tree.nodes[p.id].children.push_back(child);
      work.push_back({child, p.path});
    }
  }
  return tree;
}

Circuit random_junta_circuit(std::uint32_t n, unsigned t, std::size_t m, std::mt19937_64& rng) {
  Circuit c{n, 1, t, {}};
  c.gates.reserve(m);
  for (std::size_t i = 0; i < m; ++i) c.gates.emplace_back(random_junta(n, t, rng));
  return c;
}

Circuit random_tree_circuit(std::uint32_t n, unsigned w, unsigned t, std::size_t m, std::mt19937_64& rng) {
  Circuit c{n, w, t, {}};
  c.gates.reserve(m);
  for (std::size_t i = 0; i < m; ++i) c.gates.emplace_back(random_tree(n, w, t, rng));
  return c;
}

void for_each_input(const Circuit& c, unsigned max_bits, const std::function<void(const Symbols&)>& visit) {
  const std::uint64_t bits = static_cast<std::uint64_t>(c.n) * c.w;
  if (bits > max_bits)
    throw CapExceeded("input space 2^" + std::to_string(bits) + " above enumeration cap 2^" + std::to_string(max_bits));
  Symbols x(c.n, 0);
  const std::uint32_t base = 1u << c.w;
  for (std::uint64_t count = 0; count < (std::uint64_t{1} << bits); ++count) {
    visit(x);
    for (std::uint32_t j = 0; j < c.n; ++j) {
      if (++x[j] < base) break;
      x[j] = 0;
    }
  }
}

}  // namespace xorcert
