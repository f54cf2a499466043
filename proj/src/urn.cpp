#include "prefatt/urn.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace prefatt {

namespace {

void check_urn(std::int64_t b, std::int64_t w) {
    if (b < 1 || w < 1) throw std::invalid_argument("urn counts must be >= 1");
}

void check_dp_guard(std::int64_t b, std::int64_t w, std::int64_t m) {
    if (m < 0) throw std::invalid_argument("draw count must be >= 0");
    if (m > 25 || b + w > 10)
        throw std::invalid_argument("exact pmf guard: need m <= 25 and b + w <= 10");
}

}  // namespace

std::int64_t simulate_polya(const ClassicalUrn& urn, RngStream& rng) {
    check_urn(urn.b, urn.w);
    if (urn.m < 0) throw std::invalid_argument("draw count must be >= 0");
    std::int64_t w = urn.w;
    for (std::int64_t k = 0; k < urn.m; ++k) {
        std::int64_t total = urn.b + urn.w + k;
        if (static_cast<std::int64_t>(rng.uniform_index(
                static_cast<std::uint64_t>(total))) < w)
            ++w;
    }
    return w;
}

Rational polya_cdf_exact(std::int64_t w, std::int64_t t, std::int64_t m) {
    check_urn(1, w);
    if (m < 0) throw std::invalid_argument("draw count must be >= 0");
    if (t < w || t > w + m)
        throw std::invalid_argument("polya_cdf_exact: t outside [w, w + m]");
    Rational v(1);
    for (std::int64_t k = 0; k < w; ++k)
        v *= Rational(t - k, m + w - k);
    return v;
}

ExactPmf polya_pmf_dp(const ClassicalUrn& urn) {
    check_urn(urn.b, urn.w);
    check_dp_guard(urn.b, urn.w, urn.m);
    // state: number of white draws so far -> probability
    std::vector<Rational> cur{Rational(1)};
    for (std::int64_t k = 0; k < urn.m; ++k) {
        std::int64_t total = urn.b + urn.w + k;
        std::vector<Rational> nxt(cur.size() + 1, Rational(0));
        for (std::size_t j = 0; j < cur.size(); ++j) {
            if (cur[j] == 0) continue;
            Rational pw(urn.w + static_cast<std::int64_t>(j), total);
            nxt[j + 1] += cur[j] * pw;
            nxt[j] += cur[j] * (Rational(1) - pw);
        }
        cur = std::move(nxt);
    }
    ExactPmf pmf;
    pmf.offset = urn.w;
    pmf.probs = std::move(cur);
    pmf.check_normalized();
    return pmf;
}

std::int64_t simulate_polya_imm(const ImmigrationUrn& urn, RngStream& rng) {
    check_urn(urn.b, urn.w);
    if (urn.ell < 1) throw std::invalid_argument("ell must be >= 1");
    if (urn.m < 0) throw std::invalid_argument("draw count must be >= 0");
    std::int64_t w = urn.w;
    for (std::int64_t k = 0; k < urn.m; ++k) {
        std::int64_t total = urn.b + urn.w + k + k / urn.ell;
        if (static_cast<std::int64_t>(rng.uniform_index(
                static_cast<std::uint64_t>(total))) < w)
            ++w;
    }
    return w;
}

ExactPmf polya_imm_pmf_dp(const ImmigrationUrn& urn) {
    check_urn(urn.b, urn.w);
    if (urn.ell < 1) throw std::invalid_argument("ell must be >= 1");
    check_dp_guard(urn.b, urn.w, urn.m);
    std::vector<Rational> cur{Rational(1)};
    for (std::int64_t k = 0; k < urn.m; ++k) {
        std::int64_t total = urn.b + urn.w + k + k / urn.ell;
        std::vector<Rational> nxt(cur.size() + 1, Rational(0));
        for (std::size_t j = 0; j < cur.size(); ++j) {
            if (cur[j] == 0) continue;
            Rational pw(urn.w + static_cast<std::int64_t>(j), total);
            nxt[j + 1] += cur[j] * pw;
            nxt[j] += cur[j] * (Rational(1) - pw);
        }
        cur = std::move(nxt);
    }
    ExactPmf pmf;
    pmf.offset = urn.w;
    pmf.probs = std::move(cur);
    pmf.check_normalized();
    return pmf;
}

Rational imm_factorial_moment_exact(int ell, std::int64_t w, std::int64_t t) {
    if (ell < 1) throw std::invalid_argument("ell must be >= 1");
    check_urn(1, w);
    if (t < 0) throw std::invalid_argument("draw count must be >= 0");
    if (t == 0) {
        Rational v(1);
        for (int j = 0; j <= ell; ++j) v *= Rational(w + j);
        return v;
    }
    std::int64_t T = (t - 1) / ell;
    Rational num(w);
    for (int j = 0; j <= ell; ++j) num *= Rational(w + 1 + T + t + j);
    return num / Rational(w + 1 + (static_cast<std::int64_t>(ell) + 1) * T + ell);
}

CumulativeCounts simulate_infinite_urn(const InfiniteUrnConfig& cfg, std::int64_t n,
                                       int r, RngStream& rng) {
    if (cfg.ell < 1) throw std::invalid_argument("ell must be >= 1");
    if (cfg.initial_counts.empty())
        throw std::invalid_argument("infinite urn needs at least one color");
    for (std::int64_t c : cfg.initial_counts)
        if (c < 1) throw std::invalid_argument("urn counts must be >= 1");
    if (n < 0) throw std::invalid_argument("draw count must be >= 0");
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    const std::int64_t s = cfg.s();
    if (r > s && n < static_cast<std::int64_t>(cfg.ell) * (r - s))
        throw std::invalid_argument("color r does not exist yet at time n");

    const std::int64_t final_balls = cfg.total() + n + n / cfg.ell;
    if (final_balls >= std::numeric_limits<std::int32_t>::max())
        throw std::invalid_argument("simulation size exceeds ball-list capacity");

    // Colors beyond r are lumped into one sentinel id; only counts of colors
    // <= r are needed for the cumulative readout.
    const std::int32_t sentinel = static_cast<std::int32_t>(r + 1);
    std::vector<std::int32_t> balls;
    balls.reserve(static_cast<std::size_t>(final_balls));
    std::vector<std::int64_t> counts(static_cast<std::size_t>(r) + 2, 0);
    for (std::int64_t c = 1; c <= s; ++c) {
        std::int32_t id = c <= r ? static_cast<std::int32_t>(c) : sentinel;
        counts[static_cast<std::size_t>(id)] += cfg.initial_counts[static_cast<std::size_t>(c - 1)];
        for (std::int64_t i = 0; i < cfg.initial_counts[static_cast<std::size_t>(c - 1)]; ++i)
            balls.push_back(id);
    }
    std::int64_t next_color = s + 1;
    for (std::int64_t k = 1; k <= n; ++k) {
        std::int32_t drawn = balls[rng.uniform_index(balls.size())];
        balls.push_back(drawn);
        ++counts[static_cast<std::size_t>(drawn)];
        if (k % cfg.ell == 0) {
            std::int32_t id =
                next_color <= r ? static_cast<std::int32_t>(next_color) : sentinel;
            balls.push_back(id);
            ++counts[static_cast<std::size_t>(id)];
            ++next_color;
        }
    }

    CumulativeCounts out;
    out.n = n;
    out.m.resize(static_cast<std::size_t>(r));
    std::int64_t acc = 0;
    for (int k = 1; k <= r; ++k) {
        acc += counts[static_cast<std::size_t>(k)];
        out.m[static_cast<std::size_t>(k - 1)] = acc;
    }
    return out;
}

std::vector<double> scale_urn_counts(const CumulativeCounts& counts, int ell) {
    if (ell < 1) throw std::invalid_argument("ell must be >= 1");
    if (counts.n < 1) throw std::invalid_argument("scale_urn_counts: n must be >= 1");
    const double l = static_cast<double>(ell);
    const double factor = std::pow(l, l / (l + 1.0)) /
                          ((l + 1.0) * std::pow(static_cast<double>(counts.n), l / (l + 1.0)));
    std::vector<double> out;
    out.reserve(counts.m.size());
    for (std::int64_t m : counts.m) out.push_back(factor * static_cast<double>(m));
    return out;
}

InfiniteUrnConfig graph_to_urn_params(const ModelVariant& model, const SeedGraph& seed) {
    if (model.ell < 1) throw std::invalid_argument("ell must be >= 1");
    if (seed.weights.empty()) throw std::invalid_argument("seed graph is empty");
    InfiniteUrnConfig cfg;
    cfg.ell = model.ell;
    cfg.initial_counts = seed.weights;
    if (model.kind == ModelKind::L) cfg.initial_counts.push_back(1);
    return cfg;
}

}  // namespace prefatt
