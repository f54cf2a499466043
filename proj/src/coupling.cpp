#include "prefatt/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace prefatt {

namespace {

// ceil(total * v) as the uniform draw from {1..total}. Products that land
// within 1e-12 of an integer are re-evaluated in extended precision so the
// rounding direction is deterministic rather than an artifact of one fused
// multiply.
std::int64_t scaled_ceil(std::int64_t total, double v) {
    const double p = static_cast<double>(total) * v;
    const double frac = p - std::floor(p);
    std::int64_t c;
    if (frac < 1e-12 || frac > 1.0 - 1e-12) {
        const long double pl =
            static_cast<long double>(total) * static_cast<long double>(v);
        c = static_cast<std::int64_t>(std::ceil(pl));
    } else {
        c = static_cast<std::int64_t>(std::ceil(p));
    }
    return std::clamp<std::int64_t>(c, 1, total);
}

}  // namespace

CoupledPath::CoupledPath(int w, RngStream& rng) {
    if (w < 1) throw std::invalid_argument("white count must be >= 1");
    v_.resize(static_cast<std::size_t>(w));
    for (double& x : v_) x = rng.uniform_open();
    y_ = *std::max_element(v_.begin(), v_.end());
}

std::int64_t CoupledPath::n_of(std::int64_t m) const {
    if (m < 0) throw std::invalid_argument("draw count must be >= 0");
    const std::int64_t w = static_cast<std::int64_t>(v_.size());
    std::int64_t best = 0;
    for (std::int64_t k = 0; k < w; ++k)
        best = std::max(best,
                        k + scaled_ceil(m + w - k, v_[static_cast<std::size_t>(k)]));
    return best;
}

CoupledPath couple_base(int w, RngStream& rng) { return CoupledPath(w, rng); }

CoupledPair couple_polya_beta(int b, int w, std::int64_t n, RngStream& rng) {
    if (b < 1 || w < 1) throw std::invalid_argument("urn counts must be >= 1");
    if (n < 0) throw std::invalid_argument("draw count must be >= 0");

    std::vector<CoupledPath> levels;
    levels.reserve(static_cast<std::size_t>(b));
    for (int j = 0; j < b; ++j) levels.emplace_back(w + j, rng);

    // Innermost level (white parameter w+b-1) consumes the raw draw count; the
    // value at level j, minus that level's white parameter, is the draw count
    // for level j-1.
    std::int64_t m = n;
    double y = 1.0;
    for (int j = b - 1; j >= 0; --j) {
        const CoupledPath& path = levels[static_cast<std::size_t>(j)];
        const std::int64_t v = path.n_of(m);
        y *= path.y();
        m = (j == 0) ? v : v - (w + j);
    }

    CoupledPair pair;
    pair.x = m;
    pair.y = y;
    pair.n = n;
    pair.bound_times_2 =
        static_cast<std::int64_t>(b) * (4 * static_cast<std::int64_t>(w) + b + 1);
    pair.violation =
        std::abs(static_cast<double>(pair.x) - static_cast<double>(n) * pair.y) >
        pair.bound();
    return pair;
}

}  // namespace prefatt
