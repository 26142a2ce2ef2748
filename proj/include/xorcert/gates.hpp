#pragma once

#include <cstdint>
#include <vector>

namespace xorcert {

/// Output bit = table[idx] where bit j of idx is the value of inputs[j].
struct JuntaGate {
  std::vector<std::uint32_t> inputs;
  std::vector<std::uint8_t> table;  // 2^|inputs| entries, each 0 or 1

  unsigned arity() const { return static_cast<unsigned>(inputs.size()); }
  friend bool operator==(const JuntaGate&, const JuntaGate&) = default;
};

/// Adaptive decision tree over symbols of w bits. Node 0 is the root.
struct WordDecisionTree {
  struct Node {
    std::int64_t query = -1;                // symbol index, or -1 for a leaf
    std::uint8_t leaf = 0;                  // output bit when query < 0
    std::vector<std::uint32_t> children;    // 2^w node ids, indexed by symbol value

    bool is_leaf() const { return query < 0; }
    friend bool operator==(const Node&, const Node&) = default;
  };

  unsigned w = 1;
  std::vector<Node> nodes;

  /// Longest root-to-leaf query count.
  unsigned depth() const;

  static WordDecisionTree leaf(unsigned w, std::uint8_t bit);
  friend bool operator==(const WordDecisionTree&, const WordDecisionTree&) = default;
};

/// Tree querying the gate's inputs in order; depth = arity.
WordDecisionTree junta_to_tree(const JuntaGate& gate);

}  // namespace xorcert
