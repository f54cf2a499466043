#pragma once

#include <cstdint>
#include <vector>

#include "prefatt/graph.hpp"
#include "prefatt/rational.hpp"
#include "prefatt/rng.hpp"

namespace prefatt {

// Classical two-color Polya urn: b black and w white balls; each of the m
// draws returns the drawn ball plus one more of the same color.
struct ClassicalUrn {
    std::int64_t b = 1;
    std::int64_t w = 1;
    std::int64_t m = 0;
};

// Two-color urn with black immigration: after every ell-th of the m draws one
// extra black ball is added.
struct ImmigrationUrn {
    int ell = 1;
    std::int64_t b = 1;
    std::int64_t w = 1;
    std::int64_t m = 0;
};

// Infinite-color urn: colors 1..s start with the given counts; every draw
// duplicates the drawn color, and after every ell-th draw a ball of a brand
// new color is added.
struct InfiniteUrnConfig {
    int ell = 1;
    std::vector<std::int64_t> initial_counts;  // per-color counts, all >= 1

    std::int64_t s() const { return static_cast<std::int64_t>(initial_counts.size()); }
    std::int64_t total() const {
        std::int64_t t = 0;
        for (std::int64_t c : initial_counts) t += c;
        return t;
    }
};

// Cumulative ball counts M_1 <= M_2 <= ... <= M_r after n draws.
struct CumulativeCounts {
    std::int64_t n = 0;
    std::vector<std::int64_t> m;
};

// White count after the urn's m draws.
std::int64_t simulate_polya(const ClassicalUrn& urn, RngStream& rng);

// Exact P(white count <= t) for the single-black urn (b = 1):
// prod_{k=0}^{w-1} (t - k) / (m + w - k). Requires w <= t <= w + m.
Rational polya_cdf_exact(std::int64_t w, std::int64_t t, std::int64_t m);

// Exact white-count pmf by dynamic programming over draw outcomes.
// Guarded to m <= 25 and b + w <= 10 (the sizes every caller needs).
ExactPmf polya_pmf_dp(const ClassicalUrn& urn);

// White count after the urn's m draws with immigration.
std::int64_t simulate_polya_imm(const ImmigrationUrn& urn, RngStream& rng);

// Exact white-count pmf of the immigration urn (same DP guards as above).
ExactPmf polya_imm_pmf_dp(const ImmigrationUrn& urn);

// Exact E[Y(Y+1)...(Y+ell)] for Y the white count of the b = 1 immigration
// urn after t draws: w * prod_{j=0}^{ell} (w+1+T+t+j) / (w+1+(ell+1)T+ell)
// with T = floor((t-1)/ell); the empty-draw case t = 0 gives w(w+1)...(w+ell).
Rational imm_factorial_moment_exact(int ell, std::int64_t w, std::int64_t t);

// Runs n draws and returns the cumulative counts of colors 1..r.
CumulativeCounts simulate_infinite_urn(const InfiniteUrnConfig& cfg, std::int64_t n,
                                       int r, RngStream& rng);

// values[k] = ell^(ell/(ell+1)) / ((ell+1) * n^(ell/(ell+1))) * M_{k+1}(n).
std::vector<double> scale_urn_counts(const CumulativeCounts& counts, int ell);

// Urn start matching a graph model: Model N maps to counts (d_1..d_s) and
// Model L to (d_1..d_s, 1); graph step n corresponds to urn time ell*n.
InfiniteUrnConfig graph_to_urn_params(const ModelVariant& model, const SeedGraph& seed);

}  // namespace prefatt
