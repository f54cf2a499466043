#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "prefatt/graph.hpp"
#include "prefatt/rational.hpp"
#include "prefatt/urn.hpp"

namespace prefatt {

// Exact joint laws over integer vectors, built by exhaustive trajectory
// enumeration with rational probabilities. Small instances only; these are
// the independent oracles the simulators are tested against.
using JointPmf = std::map<std::vector<std::int64_t>, Rational>;

// Joint law of (d_1, ..., d_r) after n growth steps.
JointPmf enumerate_graph_weights_law(const ModelVariant& model, const SeedGraph& seed,
                                     int n, int r);

// Joint law of the cumulative sums (d_1, d_1+d_2, ..., sum_{i<=r} d_i).
JointPmf enumerate_graph_cumulative_law(const ModelVariant& model, const SeedGraph& seed,
                                        int n, int r);

// Joint law of (M_1, ..., M_r) after `steps` draws of the infinite-color urn.
JointPmf enumerate_urn_cumulative_law(const InfiniteUrnConfig& cfg, int steps, int r);

// Joint law of spanning-tree sizes (T_1, ..., T_k) of the root plus j leaves,
// for a uniform plane binary tree with `leaves` leaves and a uniformly chosen
// ordered k-tuple of distinct leaves.
JointPmf enumerate_plane_tree_spanning_law(int leaves, int k);

// Cumulative weight law of the loop-seeded single-edge chain after `steps`
// growth steps, counting the next vertex's pending unit weight as the last
// coordinate; coordinates 1..k. This is the graph side of the plane-tree
// correspondence.
JointPmf enumerate_loop_chain_cumulative_law(int steps, int k);

// Exact total variation distance between joint laws.
Rational joint_tv(const JointPmf& p, const JointPmf& q);

// Marginal law of one coordinate.
std::map<std::int64_t, Rational> joint_marginal(const JointPmf& p, std::size_t idx);

}  // namespace prefatt
