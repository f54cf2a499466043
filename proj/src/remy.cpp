#include "prefatt/remy.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace prefatt {

PlaneTree::PlaneTree() {
    parent_.push_back(-1);
    left_.push_back(-1);
    right_.push_back(-1);
    label_.push_back(1);
    leaf_node_.assign(2, -1);
    leaf_node_[1] = 0;
}

void PlaneTree::insert_at(int node, int side) {
    if (node < 0 || node >= node_count()) {
        throw std::invalid_argument("insert_at: node out of range");
    }
    if (side != 0 && side != 1) {
        throw std::invalid_argument("insert_at: side must be 0 or 1");
    }
    if (node_count() > std::numeric_limits<std::int32_t>::max() - 2) {
        throw std::overflow_error("insert_at: tree too large");
    }
    const std::int32_t a = node_count();      // new internal node
    const std::int32_t b = a + 1;             // new leaf
    const std::int32_t new_label = static_cast<std::int32_t>(leaf_node_.size());
    const std::int32_t p = parent_[static_cast<std::size_t>(node)];

    parent_.push_back(p);
    left_.push_back(side == 0 ? b : node);
    right_.push_back(side == 0 ? node : b);
    label_.push_back(0);

    parent_.push_back(a);
    left_.push_back(-1);
    right_.push_back(-1);
    label_.push_back(new_label);

    parent_[static_cast<std::size_t>(node)] = a;
    if (p < 0) {
        root_ = a;
    } else if (left_[static_cast<std::size_t>(p)] == node) {
        left_[static_cast<std::size_t>(p)] = a;
    } else {
        right_[static_cast<std::size_t>(p)] = a;
    }
    leaf_node_.push_back(b);
}

namespace {

void render(const PlaneTree& tree, int node, bool labeled, std::string& out) {
    if (tree.is_leaf(node)) {
        if (labeled) {
            out += std::to_string(tree.leaf_label(node));
        } else {
            out += 'x';
        }
        return;
    }
    out += '(';
    render(tree, tree.left(node), labeled, out);
    render(tree, tree.right(node), labeled, out);
    out += ')';
}

}  // namespace

std::string PlaneTree::to_parens() const {
    std::string out;
    render(*this, root_, false, out);
    return out;
}

std::string PlaneTree::to_labeled_parens() const {
    std::string out;
    render(*this, root_, true, out);
    return out;
}

PlaneTree remy_grow(int leaves, RngStream& rng) {
    if (leaves < 2) {
        throw std::invalid_argument("remy_grow: need at least 2 leaves");
    }
    PlaneTree tree;
    tree.insert_at(0, 1);  // the unique two-leaf tree
    for (int j = 2; j < leaves; ++j) {
        const std::uint64_t q = rng.uniform_index(4 * static_cast<std::uint64_t>(j) - 2);
        tree.insert_at(static_cast<int>(q >> 1), static_cast<int>(q & 1));
    }
    return tree;
}

namespace {

std::vector<std::int64_t> spanning_walk(const PlaneTree& tree,
                                        const std::vector<int>& leaf_nodes) {
    std::vector<char> marked(static_cast<std::size_t>(tree.node_count()), 0);
    std::vector<std::int64_t> sizes;
    sizes.reserve(leaf_nodes.size());
    std::int64_t count = 0;
    for (const int start : leaf_nodes) {
        int node = start;
        while (node >= 0 && !marked[static_cast<std::size_t>(node)]) {
            marked[static_cast<std::size_t>(node)] = 1;
            ++count;
            node = tree.parent(node);
        }
        sizes.push_back(count);
    }
    return sizes;
}

}  // namespace

std::vector<std::int64_t> spanning_sizes(const PlaneTree& tree, int k) {
    if (k < 1 || k > tree.leaf_count()) {
        throw std::invalid_argument("spanning_sizes: k exceeds leaf count");
    }
    std::vector<int> leaf_nodes;
    leaf_nodes.reserve(static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j) {
        leaf_nodes.push_back(tree.leaf_node(j));
    }
    return spanning_walk(tree, leaf_nodes);
}

std::vector<std::int64_t> spanning_sizes_of(const PlaneTree& tree,
                                            const std::vector<int>& leaf_nodes) {
    if (leaf_nodes.empty()) {
        throw std::invalid_argument("spanning_sizes_of: empty leaf list");
    }
    for (const int node : leaf_nodes) {
        if (node < 0 || node >= tree.node_count() || !tree.is_leaf(node)) {
            throw std::invalid_argument("spanning_sizes_of: not a leaf node");
        }
    }
    return spanning_walk(tree, leaf_nodes);
}

CoupledGrowth coupled_remy_modelL(std::int64_t n, int k, RngStream& rng,
                                  std::int64_t crosscheck_every) {
    if (n < 1) {
        throw std::invalid_argument("coupled_remy_modelL: n must be >= 1");
    }
    if (k < 1) {
        throw std::invalid_argument("coupled_remy_modelL: k must be >= 1");
    }
    if (n > (std::numeric_limits<std::int32_t>::max() - 3) / 2) {
        throw std::invalid_argument("coupled_remy_modelL: n too large");
    }

    CoupledGrowth out;
    out.tree.insert_at(0, 1);
    // owner[node] = smallest leaf label in the node's subtree = the graph
    // vertex whose weight the node contributes to.
    std::vector<std::int32_t> owner = {1, 1, 2};
    out.weights = {2, 1};

    const std::size_t kk = static_cast<std::size_t>(k);
    std::vector<std::int64_t> span(kk, 0), cum(kk, 0);
    for (std::size_t j = 0; j < kk; ++j) {
        span[j] = (j == 0) ? 2 : 3;  // T_1 = 2, everything from j = 2 on is clamped
        cum[j] = (j == 0) ? 2 : 3;
    }
    out.span_trace.push_back(span);
    out.weight_trace.push_back(cum);

    for (std::int64_t t = 1; t <= n; ++t) {
        const std::uint64_t q = rng.uniform_index(4 * static_cast<std::uint64_t>(t) + 2);
        const int u = static_cast<int>(q >> 1);
        const int side = static_cast<int>(q & 1);
        const std::int32_t v = owner[static_cast<std::size_t>(u)];

        out.tree.insert_at(u, side);
        owner.push_back(v);                               // new internal node
        owner.push_back(static_cast<std::int32_t>(t + 2));  // new leaf

        out.weights[static_cast<std::size_t>(v) - 1] += 1;
        out.weights.push_back(1);

        // The new internal node belongs to every span with j >= v; the new
        // leaf to every span with j >= t + 2. Cumulative weights move by the
        // exact same rule, which is the point of the coupling.
        for (std::size_t j = static_cast<std::size_t>(v) - 1; j < kk; ++j) {
            span[j] += 1;
            cum[j] += 1;
        }
        for (std::size_t j = static_cast<std::size_t>(std::min<std::int64_t>(t + 2, k + 1)) - 1;
             j < kk; ++j) {
            span[j] += 1;
            cum[j] += 1;
        }

        for (std::size_t j = 0; j < kk; ++j) {
            if (span[j] != cum[j]) {
                ++out.violations;
            }
        }
        if (crosscheck_every > 0 && t % crosscheck_every == 0) {
            const int jj = static_cast<int>(
                std::min<std::int64_t>(static_cast<std::int64_t>(k), t + 2));
            const std::vector<std::int64_t> fresh = spanning_sizes(out.tree, jj);
            for (int j = 0; j < jj; ++j) {
                if (fresh[static_cast<std::size_t>(j)] != span[static_cast<std::size_t>(j)]) {
                    ++out.violations;
                }
            }
        }
        out.span_trace.push_back(span);
        out.weight_trace.push_back(cum);
    }
    out.steps = n;
    return out;
}

}  // namespace prefatt
