#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <prefatt/distributions.hpp>
#include <prefatt/limits.hpp>
#include <prefatt/rng.hpp>
#include <prefatt/stats.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

using namespace prefatt;

TEST_CASE("exponent parameters by region") {
    const LimitSpec excluded = limit_params(LimitVariant::ModelN, 1, {1, 1}, 4);
    CHECK(excluded.a(2) == 3);
    CHECK(excluded.a(3) == 5);
    CHECK(excluded.m(2) == 2);
    const LimitFactorParams tail = beta_factor(excluded, 3);
    CHECK(tail.a == 5);
    CHECK(tail.beta_second == 1);
    // Below s the factor keeps the seed split.
    const LimitSpec split = limit_params(LimitVariant::ModelN, 1, {1, 2}, 3);
    const LimitFactorParams head = beta_factor(split, 1);
    CHECK(head.a == 1);
    CHECK(head.beta_second == 2);

    const LimitSpec looped = limit_params(LimitVariant::ModelL, 1, {2}, 2);
    CHECK(looped.a(1) == 2);

    const LimitSpec cubic = limit_params(LimitVariant::ModelL, 2, {2}, 3);
    const LimitFactorParams end = beta_factor(cubic, 3);
    CHECK(end.a == 8);
    CHECK(end.gga_power == 3);

    // The urn variant keeps the excluded-model exponent shift.
    const LimitSpec urn = limit_params(LimitVariant::Urn, 2, {1, 1}, 3);
    CHECK(urn.a(3) == 2 + 3 + 2);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(limit_params(LimitVariant::ModelN, 1, {1, 1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(limit_params(LimitVariant::Urn, 1, {1, 1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(limit_params(LimitVariant::ModelL, 1, {0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(limit_params(LimitVariant::ModelL, 0, {1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(limit_params(LimitVariant::ModelL, 1, {}, 1), std::invalid_argument);
}

TEST_CASE("single-coordinate limit has the generalized gamma law") {
    const LimitSpec spec = limit_params(LimitVariant::ModelL, 1, {2}, 1);
    RngStream rng(41, 0);
    const int n = 100000;
    std::vector<double> zs(static_cast<std::size_t>(n));
    for (double& z : zs) {
        const LimitVector v = sample_limit_z(spec, rng);
        REQUIRE(v.z.size() == 1);
        CHECK(v.y[0] == v.z[0]);
        z = v.z[0];
    }
    const MomentEstimate mean = moment_estimate(zs, 1);
    CHECK(std::abs(mean.value - std::tgamma(1.5)) <= 4.0 * mean.se);
    CHECK(ks_one_sample(std::move(zs),
                        [](double x) { return gga_cdf(GgaParams{2.0, 2.0}, x); }) < 0.01);
}

TEST_CASE("consecutive ratios carry the factor laws") {
    // Tail region: Z_3 / Z_4 ~ Beta(a_3, 1); head region: Z_1 / Z_2 ~ Beta(m_1, d_2).
    const LimitSpec tail_spec = limit_params(LimitVariant::ModelL, 2, {3}, 4);
    const double a3 = static_cast<double>(tail_spec.a(3));
    RngStream rng(42, 0);
    const int n = 200000;
    std::vector<double> tail(static_cast<std::size_t>(n)), head(static_cast<std::size_t>(n));
    const LimitSpec head_spec = limit_params(LimitVariant::ModelN, 1, {1, 2}, 2);
    for (int i = 0; i < n; ++i) {
        const LimitVector v = sample_limit_z(tail_spec, rng);
        tail[static_cast<std::size_t>(i)] = v.z[2] / v.z[3];
        const LimitVector w = sample_limit_z(head_spec, rng);
        head[static_cast<std::size_t>(i)] = w.z[0] / w.z[1];
        for (std::size_t k = 1; k < v.z.size(); ++k) {
            CHECK(v.z[k] >= v.z[k - 1]);
            CHECK(v.y[k] == doctest::Approx(v.z[k] - v.z[k - 1]).epsilon(1e-9));
        }
    }
    CHECK(a3 == 9.0);
    CHECK(ks_one_sample(std::move(tail), [a3](double x) { return std::pow(x, a3); }) < 0.005);
    CHECK(ks_one_sample(std::move(head), [](double x) {
              return beta_cdf(BetaParams{1.0, 2.0}, x);
          }) < 0.005);
}

TEST_CASE("unit-rate start turns cumulative powers into a poisson process") {
    // With d_1 = ell + 1 the first summand is Exp(1) like all the rest, so
    // the Z_k^(ell+1) are arrival times: iid standard-exponential gaps.
    RngStream rng(43, 0);
    const int n = 100000;
    std::vector<double> gap2(static_cast<std::size_t>(n)), gap3(static_cast<std::size_t>(n));
    double lag_xy = 0.0, lag_x = 0.0, lag_y = 0.0, lag_xx = 0.0, lag_yy = 0.0;
    for (int i = 0; i < n; ++i) {
        const LimitVector v = sample_limit_gamma_rep(2, 1, 6, rng);
        const auto arrival = [&](int k) { return v.z[static_cast<std::size_t>(k)] *
                                                 v.z[static_cast<std::size_t>(k)]; };
        const double g2 = arrival(2) - arrival(1), g3 = arrival(3) - arrival(2);
        gap2[static_cast<std::size_t>(i)] = g2;
        gap3[static_cast<std::size_t>(i)] = g3;
        lag_xy += g2 * g3;
        lag_x += g2;
        lag_y += g3;
        lag_xx += g2 * g2;
        lag_yy += g3 * g3;
    }
    const auto expo = [](double x) { return 1.0 - std::exp(-x); };
    CHECK(ks_one_sample(std::move(gap2), expo) < 0.01);
    CHECK(ks_one_sample(std::move(gap3), expo) < 0.01);
    const double num = lag_xy / n - (lag_x / n) * (lag_y / n);
    const double den = std::sqrt((lag_xx / n - lag_x / n * (lag_x / n)) *
                                 (lag_yy / n - lag_y / n * (lag_y / n)));
    CHECK(std::abs(num / den) < 0.02);
}

TEST_CASE("dirichlet representation splits the total exactly") {
    const LimitSpec spec = limit_params(LimitVariant::ModelL, 1, {1, 1}, 2);
    RngStream rng(44, 0);
    for (int i = 0; i < 1000; ++i) {
        const LimitVector v = sample_limit_dirichlet_rep(spec, rng);
        REQUIRE(v.y.size() == 2);
        double sum = 0.0;
        for (double y : v.y) {
            CHECK(y >= 0.0);
            sum += y;
        }
        CHECK(sum == doctest::Approx(v.z.back()).epsilon(1e-12));
        CHECK(v.z[0] <= v.z[1]);
    }
    const LimitSpec wide = limit_params(LimitVariant::ModelL, 1, {1, 1}, 3);
    CHECK_THROWS_AS(sample_limit_dirichlet_rep(wide, rng), std::invalid_argument);
}

TEST_CASE("max functional grows with the truncation depth on shared draws") {
    for (int i = 0; i < 500; ++i) {
        RngStream narrow(45, static_cast<std::uint64_t>(i));
        RngStream wide(45, static_cast<std::uint64_t>(i));
        const double m3 = sample_max_limit_gamma(2, 1, 3, narrow);
        const double m6 = sample_max_limit_gamma(2, 1, 6, wide);
        CHECK(m3 <= m6);
        CHECK(m3 > 0.0);
    }
}

TEST_CASE("the argmax of the increments concentrates at the front") {
    RngStream rng(46, 0);
    const int n = 100000, r = 256;
    int deep = 0;
    for (int i = 0; i < n; ++i) {
        const LimitVector v = sample_limit_gamma_rep(1, 1, r, rng);
        int arg = 0;
        for (int k = 1; k < r; ++k)
            if (v.y[static_cast<std::size_t>(k)] > v.y[static_cast<std::size_t>(arg)]) arg = k;
        if (arg >= 64) ++deep;
    }
    CHECK(deep < n / 500);
}

TEST_CASE("ratio extraction") {
    CHECK(mori_tau(LimitVector{{1.0}, {1.0}}).empty());
    const std::vector<double> tau = mori_tau(LimitVector{{1.0, 2.0, 4.0}, {}});
    CHECK(tau == std::vector<double>{0.5, 0.5});
}

TEST_CASE("increment identities: the loop-chain base case is a root-exponential") {
    RngStream rng(47, 0);
    const int n = 100000;
    std::vector<double> lhs(static_cast<std::size_t>(n)), rhs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        lhs[static_cast<std::size_t>(i)] = identity_lhs_sample(IdentityModel::L, 1, rng);
        rhs[static_cast<std::size_t>(i)] = identity_rhs_sample(IdentityModel::L, 1, rng);
    }
    const auto cdf = [](double x) { return 1.0 - std::exp(-x * x); };
    CHECK(ks_one_sample(std::move(lhs), cdf) < 0.01);
    CHECK(ks_one_sample(std::move(rhs), cdf) < 0.01);
    CHECK(identity_moment(IdentityModel::L, 1, 2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(identity_moment(IdentityModel::L, 1, 4) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("identity plumbing: moments and sampler routing agree") {
    for (const IdentityModel model : {IdentityModel::N, IdentityModel::L}) {
        for (int i = 2; i <= 4; ++i) {
            CHECK_THROWS_AS(identity_moment(model, i, 0), std::invalid_argument);
            for (int q = 1; q <= 4; ++q) {
                const auto [sampler, moment] =
                    identity_sampler_and_moments(model, IdentitySide::Lhs, i, q);
                CHECK(moment == identity_moment(model, i, q));
                RngStream a(48, static_cast<std::uint64_t>(16 * i + q));
                RngStream b(48, static_cast<std::uint64_t>(16 * i + q));
                CHECK(sampler.sample(a) == identity_lhs_sample(model, i, b));
            }
            const auto [rhs, moment] =
                identity_sampler_and_moments(model, IdentitySide::Rhs, i, 1);
            RngStream a(49, static_cast<std::uint64_t>(i));
            RngStream b(49, static_cast<std::uint64_t>(i));
            CHECK(rhs.sample(a) == identity_rhs_sample(model, i, b));
            CHECK(moment > 0.0);
        }
    }
}
