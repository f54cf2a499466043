#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <prefatt/coupling.hpp>
#include <prefatt/distributions.hpp>
#include <prefatt/rng.hpp>
#include <prefatt/stats.hpp>
#include <prefatt/urn.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

using namespace prefatt;

namespace {

double tv_against(const std::map<std::int64_t, std::int64_t>& hist, std::int64_t n,
                  const ExactPmf& pmf) {
    double tv = 0.0;
    std::map<std::int64_t, std::int64_t> rest = hist;
    for (std::size_t i = 0; i < pmf.probs.size(); ++i) {
        const std::int64_t v = pmf.offset + static_cast<std::int64_t>(i);
        const auto it = rest.find(v);
        const double emp = it == rest.end() ? 0.0 : it->second / static_cast<double>(n);
        tv += std::abs(emp - to_double(pmf.probs[i]));
        if (it != rest.end()) rest.erase(it);
    }
    for (const auto& [v, c] : rest) tv += c / static_cast<double>(n);
    return 0.5 * tv;
}

}  // namespace

TEST_CASE("a path starts at its white count") {
    for (int w = 1; w <= 5; ++w) {
        RngStream rng(61, static_cast<std::uint64_t>(w));
        const CoupledPath path = couple_base(w, rng);
        CHECK(path.n_of(0) == w);
        CHECK(path.w() == w);
        CHECK(path.y() > 0.0);
        CHECK(path.y() < 1.0);
    }
}

TEST_CASE("one path serves every draw count with the right marginals") {
    const int reps = 100000;
    std::vector<std::map<std::int64_t, std::int64_t>> hists(26);
    RngStream rng(62, 0);
    for (int i = 0; i < reps; ++i) {
        const CoupledPath path = couple_base(1, rng);
        for (std::int64_t m = 0; m <= 25; ++m) hists[static_cast<std::size_t>(m)][path.n_of(m)] += 1;
    }
    for (std::int64_t m = 0; m <= 25; ++m) {
        const double tv =
            tv_against(hists[static_cast<std::size_t>(m)], reps, polya_pmf_dp(ClassicalUrn{1, 1, m}));
        CHECK(tv < 0.01);
    }
}

TEST_CASE("pathwise pinch: the count never strays far from the slope") {
    std::vector<std::int64_t> grid;
    for (std::int64_t m = 0; m <= 100; ++m) grid.push_back(m);
    for (std::int64_t m = 128; m <= 10000; m *= 2) grid.push_back(m);
    for (int w = 1; w <= 4; ++w) {
        RngStream rng(63, static_cast<std::uint64_t>(w));
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const CoupledPath path = couple_base(w, rng);
            for (const std::int64_t m : grid)
                worst = std::max(worst,
                                 std::abs(static_cast<double>(path.n_of(m)) -
                                          static_cast<double>(m) * path.y()));
        }
        CHECK(worst <= static_cast<double>(w) + 1.0);
    }
}

TEST_CASE("joint draws keep both marginals") {
    const int b = 2, w = 2, reps = 100000;
    const std::int64_t n = 7;
    std::map<std::int64_t, std::int64_t> xs;
    std::vector<double> ys(static_cast<std::size_t>(reps));
    RngStream rng(64, 0);
    for (int i = 0; i < reps; ++i) {
        const CoupledPair p = couple_polya_beta(b, w, n, rng);
        CHECK_FALSE(p.violation);
        xs[p.x] += 1;
        ys[static_cast<std::size_t>(i)] = p.y;
    }
    CHECK(tv_against(xs, reps, polya_pmf_dp(ClassicalUrn{b, w, n})) < 0.01);
    CHECK(ks_one_sample(std::move(ys), [](double y) {
              return beta_cdf(BetaParams{2.0, 2.0}, y);
          }) < 0.005);
}

TEST_CASE("no draws means the bare white count") {
    RngStream rng(65, 0);
    for (int b = 1; b <= 3; ++b)
        for (int w = 1; w <= 3; ++w)
            for (int i = 0; i < 200; ++i) {
                const CoupledPair p = couple_polya_beta(b, w, 0, rng);
                CHECK(p.x == w);
                CHECK_FALSE(p.violation);
            }
}

TEST_CASE("single-black joint count follows the closed-form cdf at depth") {
    const std::int64_t n = 5000;
    const int reps = 100000;
    for (int w = 1; w <= 3; ++w) {
        RngStream rng(66, static_cast<std::uint64_t>(w));
        std::vector<double> xs(static_cast<std::size_t>(reps));
        for (int i = 0; i < reps; ++i)
            xs[static_cast<std::size_t>(i)] =
                static_cast<double>(couple_polya_beta(1, w, n, rng).x);
        const auto cdf = [w, n](double t) {
            const std::int64_t v = std::clamp<std::int64_t>(
                static_cast<std::int64_t>(std::floor(t)), w - 1, w + n);
            if (v < w) return 0.0;
            return to_double(polya_cdf_exact(w, v, n));
        };
        CHECK(ks_one_sample(std::move(xs), cdf) < 0.01);
    }
}

TEST_CASE("the certified bound is tight enough to be nontrivial") {
    // For b = w = 1 the bound is 3; a run long enough to see |X - nY| > 2
    // confirms the inequality is doing work at this scale.
    RngStream rng(67, 0);
    double worst = 0.0;
    const std::int64_t n = 1000;
    for (int i = 0; i < 20000; ++i) {
        const CoupledPair p = couple_polya_beta(1, 1, n, rng);
        worst = std::max(worst, std::abs(static_cast<double>(p.x) -
                                         static_cast<double>(n) * p.y));
        CHECK(p.bound() == 3.0);
    }
    CHECK(worst <= 3.0);
    CHECK(worst > 1.5);
}
