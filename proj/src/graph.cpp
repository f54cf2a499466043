#include "prefatt/graph.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace prefatt {

namespace {

void validate_common(const ModelVariant& model, const SeedGraph& seed,
                     std::int64_t n, int r) {
    if (model.ell < 1) throw std::invalid_argument("ell must be >= 1");
    if (seed.weights.empty()) throw std::invalid_argument("seed graph is empty");
    for (std::int64_t w : seed.weights)
        if (w < 1) throw std::invalid_argument("seed weights must be >= 1");
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (r < 0) throw std::invalid_argument("r must be >= 0");
    std::int64_t s = static_cast<std::int64_t>(seed.weights.size());
    if (r > s + n) throw std::invalid_argument("r exceeds vertex count");
    std::int64_t total = seed.total() + (static_cast<std::int64_t>(model.ell) + 1) * n;
    if (s + n >= std::numeric_limits<std::int32_t>::max() ||
        total >= std::numeric_limits<std::int32_t>::max())
        throw std::invalid_argument("simulation size exceeds ball-list capacity");
}

}  // namespace

WeightTrace simulate(const ModelVariant& model, const SeedGraph& seed,
                     std::int64_t n, int r, RngStream& rng, EdgeList* edges) {
    validate_common(model, seed, n, r);
    const std::int64_t s = static_cast<std::int64_t>(seed.weights.size());
    const std::int64_t m_s = seed.total();
    const int ell = model.ell;

    std::vector<std::int32_t> balls;
    balls.reserve(static_cast<std::size_t>(m_s + (ell + 1) * n));
    std::vector<std::int64_t> weights(static_cast<std::size_t>(s + n), 0);
    for (std::int64_t v = 1; v <= s; ++v) {
        weights[static_cast<std::size_t>(v - 1)] = seed.weights[static_cast<std::size_t>(v - 1)];
        for (std::int64_t i = 0; i < seed.weights[static_cast<std::size_t>(v - 1)]; ++i)
            balls.push_back(static_cast<std::int32_t>(v));
    }

    for (std::int64_t step = 1; step <= n; ++step) {
        const std::int64_t v = s + step;
        if (model.kind == ModelKind::L) {
            balls.push_back(static_cast<std::int32_t>(v));
            weights[static_cast<std::size_t>(v - 1)] = 1;
        }
        for (int e = 0; e < ell; ++e) {
            std::int32_t target = balls[rng.uniform_index(balls.size())];
            balls.push_back(target);
            ++weights[static_cast<std::size_t>(target - 1)];
            if (edges) edges->emplace_back(v, target);
        }
        if (model.kind == ModelKind::N) {
            balls.push_back(static_cast<std::int32_t>(v));
            weights[static_cast<std::size_t>(v - 1)] = 1;
        }
        assert(static_cast<std::int64_t>(balls.size()) ==
               m_s + (static_cast<std::int64_t>(ell) + 1) * step);
    }

    WeightTrace trace;
    trace.n = n;
    trace.total_weight = static_cast<std::int64_t>(balls.size());
    trace.tracked.assign(weights.begin(), weights.begin() + r);
    return trace;
}

ScaledDegrees scale_weights(const WeightTrace& trace, int ell) {
    if (trace.n < 1) throw std::invalid_argument("scale_weights: n must be >= 1");
    if (ell < 1) throw std::invalid_argument("scale_weights: ell must be >= 1");
    const double l = static_cast<double>(ell);
    const double denom =
        (l + 1.0) * std::pow(static_cast<double>(trace.n), l / (l + 1.0));
    ScaledDegrees out;
    out.n = trace.n;
    out.values.reserve(trace.tracked.size());
    for (std::int64_t w : trace.tracked)
        out.values.push_back(static_cast<double>(w) / denom);
    return out;
}

WeightTrace simulate_lumped(const ModelVariant& base, const SeedGraph& seed,
                            int ell, std::int64_t n, int r, RngStream& rng,
                            bool include_seed) {
    if (base.ell != 1)
        throw std::invalid_argument("simulate_lumped: base model must have ell == 1");
    if (ell < 1) throw std::invalid_argument("simulate_lumped: ell must be >= 1");
    if (n < 0) throw std::invalid_argument("simulate_lumped: n must be >= 0");
    if (r < 0 || r > n) throw std::invalid_argument("r exceeds vertex count");
    const std::int64_t s = static_cast<std::int64_t>(seed.weights.size());
    const std::int64_t base_steps =
        include_seed ? static_cast<std::int64_t>(ell) * n - s
                     : static_cast<std::int64_t>(ell) * n;
    if (base_steps < 0)
        throw std::invalid_argument("simulate_lumped: n*ell must cover the seed");

    // First lump boundary in global vertex labels.
    const std::int64_t first = include_seed ? 1 : s + 1;
    const std::int64_t track_vertices = first - 1 + static_cast<std::int64_t>(ell) * r;
    WeightTrace base_trace = simulate(base, seed, base_steps,
                                      static_cast<int>(track_vertices), rng);

    WeightTrace out;
    out.n = base_steps;
    out.total_weight = base_trace.total_weight;
    out.tracked.reserve(static_cast<std::size_t>(r));
    for (std::int64_t i = 0; i < r; ++i) {
        std::int64_t sum = 0;
        for (std::int64_t j = 0; j < ell; ++j)
            sum += base_trace.tracked[static_cast<std::size_t>(first - 1 + i * ell + j)];
        out.tracked.push_back(sum);
    }
    return out;
}

LumpEdgeStats lumped_edge_stats(const EdgeList& edges, std::int64_t s, int ell,
                                bool include_seed) {
    if (ell < 1) throw std::invalid_argument("lumped_edge_stats: ell must be >= 1");
    auto lump_of = [&](std::int64_t v) -> std::int64_t {
        if (include_seed) return (v - 1) / ell;
        if (v <= s) return -v;  // each seed vertex stays its own node
        return (v - s - 1) / ell;
    };
    LumpEdgeStats stats;
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> seen;
    for (const auto& [from, to] : edges) {
        std::int64_t a = lump_of(from), b = lump_of(to);
        if (a == b) {
            ++stats.loops;
            continue;
        }
        if (a > b) std::swap(a, b);
        if (++seen[{a, b}] > 1) ++stats.multi_edges;
    }
    return stats;
}

}  // namespace prefatt
