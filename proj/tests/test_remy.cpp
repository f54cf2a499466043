#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <prefatt/enumerate.hpp>
#include <prefatt/graph.hpp>
#include <prefatt/rational.hpp>
#include <prefatt/remy.hpp>
#include <prefatt/rng.hpp>
#include <prefatt/stats.hpp>

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

using namespace prefatt;

TEST_CASE("two leaves give the one fixed tree") {
    RngStream rng(71, 0);
    const PlaneTree tree = remy_grow(2, rng);
    CHECK(tree.leaf_count() == 2);
    CHECK(tree.node_count() == 3);
    CHECK(tree.to_labeled_parens() == "(12)");
    CHECK(tree.to_parens() == "(xx)");
}

TEST_CASE("grown trees are full binary with consistent links") {
    RngStream rng(71, 1);
    for (int m = 2; m <= 10; ++m) {
        const PlaneTree tree = remy_grow(m, rng);
        CHECK(tree.leaf_count() == m);
        CHECK(tree.node_count() == 2 * m - 1);
        int leaves_seen = 0;
        for (int v = 0; v < tree.node_count(); ++v) {
            if (tree.is_leaf(v)) {
                ++leaves_seen;
                CHECK(tree.leaf_node(tree.leaf_label(v)) == v);
            } else {
                CHECK(tree.parent(tree.left(v)) == v);
                CHECK(tree.parent(tree.right(v)) == v);
            }
        }
        CHECK(leaves_seen == m);
        CHECK(tree.parent(tree.root()) < 0);
    }
}

TEST_CASE("shapes come out uniform") {
    for (const auto& [m, n_shapes] : std::vector<std::pair<int, int>>{{3, 2}, {4, 5}}) {
        std::map<std::string, int> hist;
        const int reps = 30000;
        RngStream rng(72, static_cast<std::uint64_t>(m));
        for (int i = 0; i < reps; ++i) hist[remy_grow(m, rng).to_parens()] += 1;
        REQUIRE(static_cast<int>(hist.size()) == n_shapes);
        double tv = 0.0;
        for (const auto& [shape, count] : hist)
            tv += std::abs(count / static_cast<double>(reps) - 1.0 / n_shapes);
        CHECK(0.5 * tv < 0.02);
    }
}

TEST_CASE("spanning sizes: anchors and growth") {
    RngStream rng(73, 0);
    {
        const PlaneTree base = remy_grow(2, rng);
        CHECK(spanning_sizes(base, 1) == std::vector<std::int64_t>{2});
        CHECK(spanning_sizes(base, 2) == std::vector<std::int64_t>{2, 3});
    }
    for (int rep = 0; rep < 50; ++rep) {
        const int m = 30;
        const PlaneTree tree = remy_grow(m, rng);
        const std::vector<std::int64_t> sizes = spanning_sizes(tree, m);
        CHECK(sizes.front() >= 2);
        CHECK(sizes.back() == 2 * m - 1);
        for (std::size_t j = 1; j < sizes.size(); ++j) CHECK(sizes[j] > sizes[j - 1]);
    }
}

TEST_CASE("sampled spanning law matches enumeration, by label and by random tuple") {
    const int m = 4, k = 2, reps = 30000;
    const JointPmf law = enumerate_plane_tree_spanning_law(m, k);
    std::map<std::vector<std::int64_t>, int> by_label, by_tuple;
    RngStream rng(74, 0);
    for (int i = 0; i < reps; ++i) {
        const PlaneTree tree = remy_grow(m, rng);
        by_label[spanning_sizes(tree, k)] += 1;
        // An ordered pair of distinct leaves, off the fixed labels.
        const int a = static_cast<int>(rng.uniform_index(m)) + 1;
        int b = static_cast<int>(rng.uniform_index(m - 1)) + 1;
        if (b >= a) ++b;
        by_tuple[spanning_sizes_of(tree, {tree.leaf_node(a), tree.leaf_node(b)})] += 1;
    }
    for (const auto* hist : {&by_label, &by_tuple}) {
        double tv = 0.0;
        std::map<std::vector<std::int64_t>, int> rest = *hist;
        for (const auto& [vec, prob] : law) {
            const auto it = rest.find(vec);
            const double emp = it == rest.end() ? 0.0 : it->second / static_cast<double>(reps);
            tv += std::abs(emp - to_double(prob));
            if (it != rest.end()) rest.erase(it);
        }
        for (const auto& [vec, c] : rest) tv += c / static_cast<double>(reps);
        CHECK(0.5 * tv < 0.02);
    }
}

TEST_CASE("coupled growth: exact agreement, verified from scratch every step") {
    RngStream rng(75, 0);
    const CoupledGrowth run = coupled_remy_modelL(50, 3, rng, 1);
    CHECK(run.violations == 0);
    CHECK(run.steps == 50);
    REQUIRE(run.span_trace.size() == 51);
    CHECK(run.span_trace == run.weight_trace);
    CHECK(run.span_trace.back() == spanning_sizes(run.tree, 3));
    // Unit for the seed loop, one per step, plus the pending vertex.
    CHECK(std::accumulate(run.weights.begin(), run.weights.end(), std::int64_t{0}) ==
          2 * 50 + 3);
    CHECK(run.weights.size() == 52);
}

TEST_CASE("the leaf-count offset in the correspondence is exactly two") {
    const int steps = 3, k = 2;
    const JointPmf chain = enumerate_loop_chain_cumulative_law(steps, k);
    CHECK(joint_tv(chain, enumerate_plane_tree_spanning_law(steps + 2, k)) == Rational(0));
    CHECK(joint_tv(chain, enumerate_plane_tree_spanning_law(steps + 1, k)) > Rational(0));
    CHECK(joint_tv(chain, enumerate_plane_tree_spanning_law(steps + 3, k)) > Rational(0));
}

TEST_CASE("tree spans and independently grown chain weights share a law at depth") {
    const int n = 1024, k = 3, reps = 100000;
    std::vector<std::vector<double>> spans(k), chains(k);
    RngStream tree_rng(76, 0), chain_rng(76, 1);
    const ModelVariant model{ModelKind::L, 1};
    const SeedGraph seed{{2}};
    for (int i = 0; i < reps; ++i) {
        const PlaneTree tree = remy_grow(n + 2, tree_rng);
        const std::vector<std::int64_t> sizes = spanning_sizes(tree, k);
        const WeightTrace tr = simulate(model, seed, n, k, chain_rng);
        std::int64_t acc = 0;
        for (int j = 0; j < k; ++j) {
            spans[static_cast<std::size_t>(j)].push_back(
                static_cast<double>(sizes[static_cast<std::size_t>(j)]));
            acc += tr.tracked[static_cast<std::size_t>(j)];
            chains[static_cast<std::size_t>(j)].push_back(static_cast<double>(acc));
        }
    }
    for (int j = 0; j < k; ++j)
        CHECK(ks_two_sample(spans[static_cast<std::size_t>(j)],
                            chains[static_cast<std::size_t>(j)]) < 0.01);
}
