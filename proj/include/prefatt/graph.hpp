#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "prefatt/rng.hpp"

namespace prefatt {

// Two growth rules for proportional attachment. In both, a vertex's weight is
// its in-degree plus one and each arriving vertex attaches ell edges, with the
// receiving vertex's weight bumped immediately after every single edge.
//   N: the arriving vertex is excluded from its own draws; its unit weight is
//      added only after all ell edges are placed.
//   L: the arriving vertex's unit weight is added first and its own edges may
//      loop back onto it.
enum class ModelKind { N, L };

struct ModelVariant {
    ModelKind kind = ModelKind::L;
    int ell = 1;
};

struct SeedGraph {
    std::vector<std::int64_t> weights;  // d_1..d_s, all >= 1

    std::int64_t total() const {
        std::int64_t t = 0;
        for (std::int64_t w : weights) t += w;
        return t;
    }
};

struct WeightTrace {
    std::int64_t n = 0;                   // growth steps performed
    std::vector<std::int64_t> tracked;    // weights of vertices 1..r
    std::int64_t total_weight = 0;        // m_s + (ell+1) * n
};

struct ScaledDegrees {
    std::int64_t n = 0;
    std::vector<double> values;
};

// One recorded edge per draw: (arriving vertex, receiver), 1-based labels.
using EdgeList = std::vector<std::pair<std::int64_t, std::int64_t>>;

// Grows the graph by n vertices and returns the weights of vertices 1..r.
// O(1) per edge via a ball list holding one entry per unit of weight.
// When edges is non-null every placed edge is appended to it.
WeightTrace simulate(const ModelVariant& model, const SeedGraph& seed,
                     std::int64_t n, int r, RngStream& rng,
                     EdgeList* edges = nullptr);

// values[i] = tracked[i] / ((ell+1) * n^(ell/(ell+1))).
ScaledDegrees scale_weights(const WeightTrace& trace, int ell);

// Runs the base model (must have ell == 1) and collapses blocks of `ell`
// consecutive vertices into lumped vertices, returning the first r lump
// weights. With include_seed == false the blocks tile the added vertices and
// seed vertices stay out of every lump (base runs n*ell steps). With
// include_seed == true the blocks tile global vertex labels 1..n*ell exactly
// as in the collapsed construction (base runs n*ell - s steps; requires
// n*ell >= s). The returned trace's n is the number of base growth steps so
// that scale_weights applies unchanged.
WeightTrace simulate_lumped(const ModelVariant& base, const SeedGraph& seed,
                            int ell, std::int64_t n, int r, RngStream& rng,
                            bool include_seed = false);

// Loop and multi-edge counts of the collapsed multigraph induced by an edge
// list under the same block mapping as simulate_lumped.
struct LumpEdgeStats {
    std::int64_t loops = 0;
    std::int64_t multi_edges = 0;  // edges beyond the first within a lump pair
};
LumpEdgeStats lumped_edge_stats(const EdgeList& edges, std::int64_t s, int ell,
                                bool include_seed = false);

}  // namespace prefatt
