#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prefatt/rng.hpp"

namespace prefatt {

// Growing full binary plane tree stored as flat arrays. Node 0 is the first
// leaf; every insertion adds one internal node and one leaf, so a tree with m
// leaves has 2m-1 nodes. Leaves are labeled 1, 2, ... in insertion order.
class PlaneTree {
  public:
    PlaneTree();

    int leaf_count() const { return static_cast<int>(leaf_node_.size()) - 1; }
    int node_count() const { return static_cast<int>(parent_.size()); }
    int root() const { return root_; }
    int parent(int node) const { return parent_[static_cast<std::size_t>(node)]; }
    int left(int node) const { return left_[static_cast<std::size_t>(node)]; }
    int right(int node) const { return right_[static_cast<std::size_t>(node)]; }
    bool is_leaf(int node) const { return left(node) < 0; }
    int leaf_label(int node) const { return label_[static_cast<std::size_t>(node)]; }
    int leaf_node(int label) const { return leaf_node_[static_cast<std::size_t>(label)]; }

    // Inserts a cherry at `node`: a fresh internal node takes its tree slot,
    // keeping `node` as one child and a brand-new leaf as the other, on
    // `side` (0 = left, 1 = right).
    void insert_at(int node, int side);

    std::string to_parens() const;          // shape only, every leaf is "x"
    std::string to_labeled_parens() const;  // leaves rendered as their labels

  private:
    std::vector<std::int32_t> parent_, left_, right_, label_;
    std::vector<std::int32_t> leaf_node_;  // label -> node index (label 0 unused)
    std::int32_t root_ = 0;
};

// Uniform binary plane tree with `leaves` >= 2 leaves: starts from the fixed
// two-leaf tree and repeats the cherry-insertion step, one uniform draw per
// step covering both the insertion node (among the 2j-1 present) and the
// side of the new leaf.
PlaneTree remy_grow(int leaves, RngStream& rng);

// sizes[j-1] = number of nodes on the union of root-to-leaf paths of the
// leaves labeled 1..j. Computed by walking each leaf path upward until it
// meets an already-marked node.
std::vector<std::int64_t> spanning_sizes(const PlaneTree& tree, int k);

// Same walk for an explicit ordered list of leaf node indices.
std::vector<std::int64_t> spanning_sizes_of(const PlaneTree& tree,
                                            const std::vector<int>& leaf_nodes);

// One shared-randomness run of tree growth and the looping ell=1 chain from
// the loop seed (single vertex of weight 2): the per-step uniform node choice
// doubles as the graph's attachment draw, so the spanning size of the first j
// leaves must equal the cumulative weight of the first j vertices at every
// step, exactly.
struct CoupledGrowth {
    PlaneTree tree;
    std::vector<std::int64_t> weights;  // final weights; last entry is the
                                        // pending unit of the next vertex
    std::vector<std::vector<std::int64_t>> span_trace;    // rows: step 0..n
    std::vector<std::vector<std::int64_t>> weight_trace;  // cumulative sums
    std::int64_t steps = 0;
    std::int64_t violations = 0;  // trace mismatches (0 unless the code is wrong)
};

// Runs n >= 1 coupled steps tracking j = 1..k. When crosscheck_every > 0 the
// incremental spanning counters are re-derived from the tree every that many
// steps and mismatches are counted as violations too.
CoupledGrowth coupled_remy_modelL(std::int64_t n, int k, RngStream& rng,
                                  std::int64_t crosscheck_every = 0);

}  // namespace prefatt
