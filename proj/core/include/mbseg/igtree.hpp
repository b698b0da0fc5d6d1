#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mbseg/distribution.hpp"
#include "mbseg/instance_base.hpp"

namespace mbseg {

// An instance base compressed into a trie. Arcs test features in a fixed
// order of descending gain; paths stop as soon as the remaining instances
// share one class. Interior nodes carry the majority label of their subset
// as the default answer for queries that fall off the path.
class IgTree {
 public:
  struct Node {
    Label label = Label::none;  // leaf label, or interior default
    bool leaf = false;
    std::vector<std::pair<Symbol, std::uint32_t>> arcs;  // sorted by symbol
  };

  const std::vector<std::size_t>& order() const { return order_; }
  std::size_t width() const { return order_.size(); }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  const Node& root() const { return nodes_.front(); }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t arc_count() const { return arc_count_; }

 private:
  friend IgTree build_igtree(const InstanceBase&, std::vector<std::size_t>);
  friend class IgTreeReader;

  std::vector<std::size_t> order_;
  std::vector<Node> nodes_;  // preorder; root at 0
  std::size_t arc_count_ = 0;
};

// Builds the trie from a non-empty base over a precomputed feature order
// (whole-base gains; nothing is recomputed per node). Throws DataError on
// an order that is not a permutation of the base's feature indices.
IgTree build_igtree(const InstanceBase& base, std::vector<std::size_t> order);

struct IgClassification {
  Label label = Label::none;
  std::size_t matched_depth = 0;  // arcs matched before the answer
};

// Trie traversal: a leaf yields its label, a missing arc the default of the
// last matching node. Throws DataError on a width mismatch.
IgClassification classify_igtree(const IgTree& tree, SymbolView query);

struct TreeStats {
  std::size_t nodes = 0;
  std::size_t arcs = 0;
  std::uint64_t unique_vectors = 0;
  std::size_t width = 0;
  // 1 - (nodes + arcs) / (unique_vectors * width)
  double compression_ratio = 0.0;
};

TreeStats tree_stats(const IgTree& tree, std::uint64_t unique_vectors);
TreeStats tree_stats(const IgTree& tree, const InstanceBase& base);

}  // namespace mbseg
