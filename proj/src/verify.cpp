#include "prefatt/verify.hpp"

#include <sys/resource.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "prefatt/coupling.hpp"
#include "prefatt/distributions.hpp"
#include "prefatt/enumerate.hpp"
#include "prefatt/graph.hpp"
#include "prefatt/limits.hpp"
#include "prefatt/remy.hpp"
#include "prefatt/stats.hpp"
#include "prefatt/urn.hpp"

namespace prefatt {

bool SuiteResult::pass() const {
    for (const CheckResult& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

namespace {

// Stream ids are partitioned per (criterion, lane, slot) so no two checks can
// ever collide, and a check keeps its streams no matter which suites run.
std::uint64_t stream_of(int criterion, int lane, std::int64_t slot) {
    return (static_cast<std::uint64_t>(criterion) << 48) |
           (static_cast<std::uint64_t>(lane) << 40) | static_cast<std::uint64_t>(slot);
}

constexpr std::int64_t kChunk = 1024;

// Replicate i draws from the stream of chunk i / kChunk, so the sample set is
// a pure function of (master_seed, criterion, lane, count) and chunks can be
// farmed out to threads freely.
template <typename Body>
void for_replicates(const VerifyOptions& opts, int criterion, int lane,
                    std::int64_t count, Body&& body) {
    const std::int64_t chunks = (count + kChunk - 1) / kChunk;
    auto run_chunk = [&](std::int64_t c) {
        RngStream rng(opts.master_seed, stream_of(criterion, lane, c));
        const std::int64_t hi = std::min(count, (c + 1) * kChunk);
        for (std::int64_t i = c * kChunk; i < hi; ++i) body(i, rng);
    };
    if (opts.threads <= 1 || chunks <= 1) {
        for (std::int64_t c = 0; c < chunks; ++c) run_chunk(c);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    const int nt = static_cast<int>(
        std::min<std::int64_t>(opts.threads, chunks));
    pool.reserve(static_cast<std::size_t>(nt));
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&] {
            for (std::int64_t c; (c = next.fetch_add(1)) < chunks;) run_chunk(c);
        });
    }
    for (std::thread& th : pool) th.join();
}

CheckResult check(std::string name, double statistic, double threshold, bool pass,
                  std::int64_t n_samples, const VerifyOptions& opts, int criterion) {
    return CheckResult{std::move(name), statistic, threshold, pass,
                       n_samples,       opts.master_seed, criterion};
}

using TimePoint = std::chrono::steady_clock::time_point;

double seconds_since(const TimePoint& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double tv_against(const std::vector<std::int64_t>& values, const ExactPmf& pmf) {
    std::map<std::int64_t, std::int64_t> hist;
    for (const std::int64_t v : values) ++hist[v];
    const double n = static_cast<double>(values.size());
    double tv = 0.0;
    for (std::size_t i = 0; i < pmf.probs.size(); ++i) {
        const std::int64_t v = pmf.offset + static_cast<std::int64_t>(i);
        const auto it = hist.find(v);
        const double emp = it == hist.end() ? 0.0 : static_cast<double>(it->second) / n;
        tv += std::abs(emp - to_double(pmf.probs[i]));
        if (it != hist.end()) hist.erase(it);
    }
    for (const auto& [v, c] : hist) tv += static_cast<double>(c) / n;  // off-support
    return 0.5 * tv;
}

// ---------------------------------------------------------------- oracles --

void suite_oracles(const VerifyOptions& opts, std::vector<CheckResult>& out) {
    // Criterion 1: DP CDF vs the closed-form single-black CDF, exact.
    {
        const TimePoint t0 = std::chrono::steady_clock::now();
        std::int64_t mism = 0, comparisons = 0;
        for (std::int64_t w = 1; w <= 5; ++w) {
            for (std::int64_t m = 0; m <= 20; ++m) {
                const ExactPmf pmf = polya_pmf_dp(ClassicalUrn{1, w, m});
                Rational cdf(0);
                for (std::int64_t t = w; t <= w + m; ++t) {
                    cdf += pmf.mass_at(t);
                    if (cdf != polya_cdf_exact(w, t, m)) ++mism;
                    ++comparisons;
                }
            }
        }
        out.push_back(check("dp_cdf_equals_closed_form", static_cast<double>(mism), 0.0,
                            mism == 0, comparisons, opts, 1));
        const double secs = seconds_since(t0);
        out.push_back(check("dp_cdf_seconds", secs, 1.0, secs < 1.0, comparisons, opts, 1));
    }
    const TimePoint sim_t0 = std::chrono::steady_clock::now();
    // Criterion 2: classical simulator vs DP, TV per cell.
    {
        const std::int64_t reps = 100000;
        double worst = 0.0;
        std::int64_t total = 0;
        int lane = 0;
        for (std::int64_t b = 1; b <= 3; ++b) {
            for (std::int64_t w = 1; w <= 3; ++w) {
                for (std::int64_t m = 0; m <= 10; ++m) {
                    const ClassicalUrn urn{b, w, m};
                    std::vector<std::int64_t> vals(static_cast<std::size_t>(reps));
                    for_replicates(opts, 2, lane++, reps, [&](std::int64_t i, RngStream& rng) {
                        vals[static_cast<std::size_t>(i)] = simulate_polya(urn, rng);
                    });
                    worst = std::max(worst, tv_against(vals, polya_pmf_dp(urn)));
                    total += reps;
                }
            }
        }
        out.push_back(check("classical_sim_tv_max", worst, 0.01, worst < 0.01, total, opts, 2));
    }
    // Criterion 2: immigration simulator vs DP.
    {
        const std::int64_t reps = 100000;
        double worst = 0.0;
        std::int64_t total = 0;
        int lane = 120;
        for (int ell = 1; ell <= 2; ++ell) {
            for (std::int64_t w = 1; w <= 3; ++w) {
                for (std::int64_t m = 0; m <= 8; ++m) {
                    const ImmigrationUrn urn{ell, 1, w, m};
                    std::vector<std::int64_t> vals(static_cast<std::size_t>(reps));
                    for_replicates(opts, 2, lane++, reps, [&](std::int64_t i, RngStream& rng) {
                        vals[static_cast<std::size_t>(i)] = simulate_polya_imm(urn, rng);
                    });
                    worst = std::max(worst, tv_against(vals, polya_imm_pmf_dp(urn)));
                    total += reps;
                }
            }
        }
        out.push_back(check("immigration_sim_tv_max", worst, 0.01, worst < 0.01, total, opts, 2));
        const double secs = seconds_since(sim_t0);
        out.push_back(check("sim_tv_seconds", secs, 60.0, secs < 60.0, total, opts, 2));
    }
    // Criterion 3: factorial-moment formula vs DP expectation, exact.
    {
        std::int64_t mism = 0, comparisons = 0;
        for (int ell = 1; ell <= 2; ++ell) {
            for (std::int64_t w = 1; w <= 3; ++w) {
                for (std::int64_t t = 1; t <= 8; ++t) {
                    const ExactPmf pmf = polya_imm_pmf_dp(ImmigrationUrn{ell, 1, w, t});
                    Rational expect(0);
                    for (std::size_t i = 0; i < pmf.probs.size(); ++i) {
                        const std::int64_t y = pmf.offset + static_cast<std::int64_t>(i);
                        Rational prod(1);
                        for (int j = 0; j <= ell; ++j) prod *= Rational(y + j);
                        expect += pmf.probs[i] * prod;
                    }
                    if (expect != imm_factorial_moment_exact(ell, w, t)) ++mism;
                    ++comparisons;
                }
            }
        }
        out.push_back(check("factorial_moment_equals_dp", static_cast<double>(mism), 0.0,
                            mism == 0, comparisons, opts, 3));
    }
    // Criterion 3: Monte Carlo at a depth the DP cannot reach.
    {
        const std::int64_t reps = 100000, t = 1000;
        std::vector<double> prods(static_cast<std::size_t>(reps));
        for_replicates(opts, 3, 0, reps, [&](std::int64_t i, RngStream& rng) {
            const double y =
                static_cast<double>(simulate_polya_imm(ImmigrationUrn{1, 1, 2, t}, rng));
            prods[static_cast<std::size_t>(i)] = y * (y + 1.0);
        });
        const MomentEstimate est = moment_estimate(prods, 1);
        const double ref = to_double(imm_factorial_moment_exact(1, 2, t));
        const double z = (est.value - ref) / est.se;
        out.push_back(check("factorial_moment_mc_z", z, 3.0, std::abs(z) <= 3.0, reps, opts, 3));
    }
}

// --------------------------------------------------------------- coupling --

void suite_coupling(const VerifyOptions& opts, std::vector<CheckResult>& out) {
    const TimePoint t0 = std::chrono::steady_clock::now();
    const int g = std::max(1, opts.grid_max);
    const std::vector<std::int64_t> ns = {0, 1, 10, 100, 10000};
    const std::int64_t cells = static_cast<std::int64_t>(g) * g * 5;
    const std::int64_t cert_total = 1000000;
    const std::int64_t cert_reps = cert_total / cells;

    // Certificate: the bound must hold on every joint sample; pool the beta
    // companions through their exact CDFs for one aggregate uniformity check.
    std::int64_t violations = 0, cert_used = 0;
    std::vector<double> pit;
    pit.reserve(static_cast<std::size_t>(cert_reps * cells));
    int lane = 0;
    for (int b = 1; b <= g; ++b) {
        for (int w = 1; w <= g; ++w) {
            for (const std::int64_t n : ns) {
                std::vector<double> ys(static_cast<std::size_t>(cert_reps));
                std::vector<char> bad(static_cast<std::size_t>(cert_reps));
                for_replicates(opts, 4, lane++, cert_reps, [&](std::int64_t i, RngStream& rng) {
                    const CoupledPair p = couple_polya_beta(b, w, n, rng);
                    ys[static_cast<std::size_t>(i)] = p.y;
                    bad[static_cast<std::size_t>(i)] = p.violation ? 1 : 0;
                });
                for (const char v : bad) violations += v;
                const BetaParams beta{static_cast<double>(w), static_cast<double>(b)};
                for (const double y : ys) pit.push_back(beta_cdf(beta, y));
                cert_used += cert_reps;
            }
        }
    }
    out.push_back(check("bound_violations", static_cast<double>(violations), 0.0,
                        violations == 0, cert_used, opts, 4));
    const double ks = ks_one_sample(std::move(pit), [](double u) { return u; });
    out.push_back(check("y_pooled_pit_ks", ks, 0.005, ks < 0.005, cert_used, opts, 4));

    // Urn-side marginals on the DP-reachable corner, at full criterion-2 depth.
    const std::int64_t reps = 100000;
    double worst = 0.0;
    std::int64_t total = 0;
    lane = 200;
    for (int b = 1; b <= g; ++b) {
        for (int w = 1; w <= g; ++w) {
            for (const std::int64_t n : {std::int64_t{0}, std::int64_t{1}, std::int64_t{10}}) {
                if (b + w > 10 || n > 25) continue;
                std::vector<std::int64_t> xs(static_cast<std::size_t>(reps));
                for_replicates(opts, 4, lane++, reps, [&](std::int64_t i, RngStream& rng) {
                    xs[static_cast<std::size_t>(i)] = couple_polya_beta(b, w, n, rng).x;
                });
                worst = std::max(
                    worst, tv_against(xs, polya_pmf_dp(ClassicalUrn{b, w, n})));
                total += reps;
            }
        }
    }
    out.push_back(check("x_marginal_tv_max", worst, 0.01, worst < 0.01, total, opts, 4));
    const double secs = seconds_since(t0);
    out.push_back(check("coupling_seconds", secs, 300.0, secs < 300.0, cert_used + total, opts, 4));
}

// --------------------------------------------------------------- lemma2.3 --

struct EquivalenceCase {
    ModelVariant model;
    SeedGraph seed;
    int max_n = 0;  // exact enumeration depth
    int r = 0;      // joint coordinates for the exact check
};

void suite_lemma23(const VerifyOptions& opts, std::vector<CheckResult>& out) {
    const std::vector<EquivalenceCase> cases = {
        {{ModelKind::L, 1}, {{2}}, 3, 2},
        {{ModelKind::N, 1}, {{1, 1}}, 3, 2},
        {{ModelKind::L, 2}, {{1}}, 2, 2},
    };
    // Exact: enumerated graph cumulative law == enumerated urn law.
    {
        double worst = 0.0;
        bool all_zero = true;
        std::int64_t combos = 0;
        for (const EquivalenceCase& c : cases) {
            const InfiniteUrnConfig cfg = graph_to_urn_params(c.model, c.seed);
            for (int n = 1; n <= c.max_n; ++n) {
                const Rational tv =
                    joint_tv(enumerate_graph_cumulative_law(c.model, c.seed, n, c.r),
                             enumerate_urn_cumulative_law(cfg, c.model.ell * n, c.r));
                worst = std::max(worst, to_double(tv));
                all_zero = all_zero && tv == Rational(0);
                ++combos;
            }
        }
        out.push_back(check("exact_joint_tv", worst, 0.0, all_zero, combos, opts, 5));
    }
    // Sampled: graph cumulative coordinates vs urn cumulative counts at n=256.
    {
        const std::int64_t reps = 100000;
        const int n = 256, r = 3;
        double worst = 0.0;
        int lane = 10;
        for (const EquivalenceCase& c : cases) {
            const InfiniteUrnConfig cfg = graph_to_urn_params(c.model, c.seed);
            std::vector<std::vector<double>> graph_cum(r), urn_cum(r);
            for (int k = 0; k < r; ++k) {
                graph_cum[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(reps));
                urn_cum[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(reps));
            }
            for_replicates(opts, 5, lane++, reps, [&](std::int64_t i, RngStream& rng) {
                const WeightTrace tr = simulate(c.model, c.seed, n, r, rng);
                std::int64_t acc = 0;
                for (int k = 0; k < r; ++k) {
                    acc += tr.tracked[static_cast<std::size_t>(k)];
                    graph_cum[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
                        static_cast<double>(acc);
                }
            });
            for_replicates(opts, 5, lane++, reps, [&](std::int64_t i, RngStream& rng) {
                const CumulativeCounts cc =
                    simulate_infinite_urn(cfg, static_cast<std::int64_t>(c.model.ell) * n, r, rng);
                for (int k = 0; k < r; ++k) {
                    urn_cum[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
                        static_cast<double>(cc.m[static_cast<std::size_t>(k)]);
                }
            });
            for (int k = 0; k < r; ++k) {
                worst = std::max(worst, ks_two_sample(graph_cum[static_cast<std::size_t>(k)],
                                                      urn_cum[static_cast<std::size_t>(k)]));
            }
        }
        out.push_back(
            check("cumulative_ks_max", worst, 0.01, worst < 0.01, reps * 6, opts, 5));
    }
}

// --------------------------------------------------- limits-equivalence --

void suite_limits_equivalence(const VerifyOptions& opts, std::vector<CheckResult>& out) {
    const std::int64_t reps = 1000000;
    struct GammaCase {
        int ell;
        std::int64_t d1;
        int r;
    };
    const std::vector<GammaCase> gamma_cases = {{1, 2, 4}, {2, 3, 3}, {1, 1, 3}};
    int lane = 0;
    for (const GammaCase& gc : gamma_cases) {
        const LimitSpec spec = limit_params(LimitVariant::ModelL, gc.ell, {gc.d1}, gc.r);
        std::vector<std::vector<double>> a(static_cast<std::size_t>(gc.r)),
            b(static_cast<std::size_t>(gc.r));
        for (int k = 0; k < gc.r; ++k) {
            a[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(reps));
            b[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(reps));
        }
        for_replicates(opts, 6, lane++, reps, [&](std::int64_t i, RngStream& rng) {
            const LimitVector v = sample_limit_z(spec, rng);
            for (int k = 0; k < gc.r; ++k)
                a[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
                    v.y[static_cast<std::size_t>(k)];
        });
        for_replicates(opts, 6, lane++, reps, [&](std::int64_t i, RngStream& rng) {
            const LimitVector v = sample_limit_gamma_rep(gc.d1, gc.ell, gc.r, rng);
            for (int k = 0; k < gc.r; ++k)
                b[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
                    v.y[static_cast<std::size_t>(k)];
        });
        double worst = 0.0;
        for (int k = 0; k < gc.r; ++k)
            worst = std::max(worst, ks_two_sample(std::move(a[static_cast<std::size_t>(k)]),
                                                  std::move(b[static_cast<std::size_t>(k)])));
        char name[64];
        std::snprintf(name, sizeof(name), "gamma_rep_ks_ell%d_d%lld_r%d", gc.ell,
                      static_cast<long long>(gc.d1), gc.r);
        out.push_back(check(name, worst, 0.01, worst < 0.01, reps, opts, 6));
    }
    // Dirichlet representation at r = s.
    const std::vector<LimitVariant> variants = {LimitVariant::ModelL, LimitVariant::ModelN};
    for (const LimitVariant variant : variants) {
        const LimitSpec spec = limit_params(variant, 1, {1, 1}, 2);
        std::vector<std::vector<double>> a(2), b(2);
        for (int k = 0; k < 2; ++k) {
            a[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(reps));
            b[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(reps));
        }
        for_replicates(opts, 6, lane++, reps, [&](std::int64_t i, RngStream& rng) {
            const LimitVector v = sample_limit_z(spec, rng);
            for (int k = 0; k < 2; ++k)
                a[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
                    v.y[static_cast<std::size_t>(k)];
        });
        for_replicates(opts, 6, lane++, reps, [&](std::int64_t i, RngStream& rng) {
            const LimitVector v = sample_limit_dirichlet_rep(spec, rng);
            for (int k = 0; k < 2; ++k)
                b[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
                    v.y[static_cast<std::size_t>(k)];
        });
        double worst = 0.0;
        for (int k = 0; k < 2; ++k)
            worst = std::max(worst, ks_two_sample(std::move(a[static_cast<std::size_t>(k)]),
                                                  std::move(b[static_cast<std::size_t>(k)])));
        out.push_back(check(variant == LimitVariant::ModelL ? "dirichlet_rep_ks_L"
                                                            : "dirichlet_rep_ks_N",
                            worst, 0.01, worst < 0.01, reps, opts, 6));
    }
}

// ------------------------------------------------------------------- mori --

void suite_mori(const VerifyOptions& opts, std::vector<CheckResult>& out) {
    const std::int64_t reps = 1000000;
    const LimitSpec spec = limit_params(LimitVariant::ModelN, 1, {1, 1}, 5);
    std::vector<std::vector<double>> taus(4);
    for (auto& t : taus) t.resize(static_cast<std::size_t>(reps));
    for_replicates(opts, 8, 0, reps, [&](std::int64_t i, RngStream& rng) {
        const std::vector<double> t = mori_tau(sample_limit_z(spec, rng));
        for (int j = 0; j < 4; ++j)
            taus[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                t[static_cast<std::size_t>(j)];
    });
    for (int j = 2; j <= 4; ++j) {
        const double p = 2.0 * j - 1.0;
        const double ks = ks_one_sample(taus[static_cast<std::size_t>(j - 1)],
                                        [p](double x) { return std::pow(x, p); });
        char name[32];
        std::snprintf(name, sizeof(name), "tau%d_ks", j);
        out.push_back(check(name, ks, 0.002, ks < 0.002, reps, opts, 8));
    }
    // Cross-correlations of the probability-transformed ratios.
    std::vector<std::vector<double>> u(4);
    for (int j = 0; j < 4; ++j) {
        u[static_cast<std::size_t>(j)].reserve(static_cast<std::size_t>(reps));
        const double p = 2.0 * j + 1.0;
        for (const double t : taus[static_cast<std::size_t>(j)])
            u[static_cast<std::size_t>(j)].push_back(std::pow(t, p));
    }
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            double mi = 0, mj = 0;
            for (std::int64_t x = 0; x < reps; ++x) {
                mi += u[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)];
                mj += u[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)];
            }
            mi /= static_cast<double>(reps);
            mj /= static_cast<double>(reps);
            double c = 0, vi = 0, vj = 0;
            for (std::int64_t x = 0; x < reps; ++x) {
                const double di =
                    u[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)] - mi;
                const double dj =
                    u[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)] - mj;
                c += di * dj;
                vi += di * di;
                vj += dj * dj;
            }
            worst = std::max(worst, std::abs(c / std::sqrt(vi * vj)));
        }
    }
    out.push_back(check("pit_cross_corr_max", worst, 0.005, worst < 0.005, reps, opts, 8));
}

// ------------------------------------------------------------- identities --

void suite_identities(const VerifyOptions& opts, std::vector<CheckResult>& out) {
    const std::int64_t reps = 1000000;
    int lane = 0;
    for (const IdentityModel model : {IdentityModel::N, IdentityModel::L}) {
        for (int i = 2; i <= 4; ++i) {
            std::vector<double> s(static_cast<std::size_t>(reps));
            for_replicates(opts, 9, lane++, reps, [&](std::int64_t x, RngStream& rng) {
                s[static_cast<std::size_t>(x)] = identity_lhs_sample(model, i, rng);
            });
            double worst = 0.0;
            for (int q = 1; q <= 4; ++q) {
                const MomentEstimate est = moment_estimate(s, q);
                const double ref = identity_moment(model, i, q);
                worst = std::max(worst, std::abs((est.value - ref) / est.se));
            }
            char name[32];
            std::snprintf(name, sizeof(name), "%s_i%d_moment_z_max",
                          model == IdentityModel::N ? "nloop" : "loop", i);
            out.push_back(check(name, worst, 3.0, worst <= 3.0, reps, opts, 9));
        }
    }
}

// ------------------------------------------------------------------ rates --

void suite_rates(const VerifyOptions& opts, std::vector<CheckResult>& out) {
    const TimePoint t0 = std::chrono::steady_clock::now();
    const std::vector<int> grid = {64, 256, 1024, 4096};
    const std::int64_t reps = 200000, limit_reps = 10000000;
    std::int64_t work = 0;
    for (const int ell : {1, 2}) {
        if (opts.ell_filter != 0 && opts.ell_filter != ell) continue;
        const ModelVariant model{ModelKind::L, ell};
        const SeedGraph seed{{2}};
        const GgaParams marginal_cdf{2.0, static_cast<double>(ell) + 1.0};
        const LimitSpec spec = limit_params(LimitVariant::ModelL, ell, {2}, 3);

        work += limit_reps + reps * static_cast<std::int64_t>(grid.size());
        std::vector<double> limit_max(static_cast<std::size_t>(limit_reps));
        for_replicates(opts, 7, 10 * ell, limit_reps, [&](std::int64_t i, RngStream& rng) {
            const LimitVector v = sample_limit_z(spec, rng);
            limit_max[static_cast<std::size_t>(i)] = std::max({v.y[0], v.y[1], v.y[2]});
        });

        std::vector<double> ks_marg, ks_max;
        for (std::size_t gi = 0; gi < grid.size(); ++gi) {
            const int n = grid[gi];
            std::vector<double> marg(static_cast<std::size_t>(reps)),
                mx(static_cast<std::size_t>(reps));
            for_replicates(opts, 7, 10 * ell + 1 + static_cast<int>(gi), reps,
                           [&](std::int64_t i, RngStream& rng) {
                               const ScaledDegrees sc =
                                   scale_weights(simulate(model, seed, n, 3, rng), ell);
                               marg[static_cast<std::size_t>(i)] = sc.values[0];
                               mx[static_cast<std::size_t>(i)] =
                                   std::max({sc.values[0], sc.values[1], sc.values[2]});
                           });
            ks_marg.push_back(ks_one_sample(
                std::move(marg), [&](double x) { return gga_cdf(marginal_cdf, x); }));
            ks_max.push_back(ks_two_sample(std::move(mx), limit_max));
        }

        const std::vector<double> ns(grid.begin(), grid.end());
        const double lo = ell == 1 ? -0.75 : -0.95;
        const double hi = ell == 1 ? -0.30 : -0.45;
        const std::vector<std::pair<std::string, const std::vector<double>*>> series = {
            {"marginal", &ks_marg}, {"max3", &ks_max}};
        for (const auto& [label, ks] : series) {
            char name[64];
            if (ell == 1) {
                double worst_step = -1.0;
                for (std::size_t i = 0; i + 1 < ks->size(); ++i)
                    worst_step = std::max(worst_step, (*ks)[i + 1] - (*ks)[i]);
                std::snprintf(name, sizeof(name), "ell%d_%s_monotone", ell, label.c_str());
                out.push_back(check(name, worst_step, 0.0, worst_step < 0.0,
                                    reps * static_cast<std::int64_t>(grid.size()), opts, 7));
            }
            const double slope = rate_fit(ns, *ks).slope;
            std::snprintf(name, sizeof(name), "ell%d_%s_slope_le", ell, label.c_str());
            out.push_back(check(name, slope, hi, slope <= hi,
                                reps * static_cast<std::int64_t>(grid.size()), opts, 7));
            std::snprintf(name, sizeof(name), "ell%d_%s_slope_ge", ell, label.c_str());
            out.push_back(check(name, slope, lo, slope >= lo,
                                reps * static_cast<std::int64_t>(grid.size()), opts, 7));
        }
    }
    const double secs = seconds_since(t0);
    out.push_back(check("rate_scan_seconds", secs, 1800.0, secs < 1800.0, work, opts, 7));
}

// ------------------------------------------------------------------- remy --

void suite_remy(const VerifyOptions& opts, std::vector<CheckResult>& out) {
    // Exact pathwise equality of spanning sizes and cumulative weights.
    {
        const std::int64_t runs = 100, n = 10000;
        std::int64_t violations = 0;
        for (std::int64_t i = 0; i < runs; ++i) {
            RngStream rng(opts.master_seed, stream_of(10, 0, i));
            violations += coupled_remy_modelL(n, 3, rng, 1024).violations;
        }
        out.push_back(check("coupled_trace_violations", static_cast<double>(violations), 0.0,
                            violations == 0, runs * n, opts, 10));
    }
    // Shape uniformity of the grower.
    {
        const std::int64_t reps = 100000;
        int lane = 1;
        for (const int m : {3, 4}) {
            std::map<std::string, std::int64_t> hist;
            std::vector<std::string> shapes(static_cast<std::size_t>(reps));
            for_replicates(opts, 10, lane++, reps, [&](std::int64_t i, RngStream& rng) {
                shapes[static_cast<std::size_t>(i)] = remy_grow(m, rng).to_parens();
            });
            for (const std::string& s : shapes) ++hist[s];
            const std::int64_t n_shapes = m == 3 ? 2 : 5;  // Catalan(m-1)
            double tv = 0.0;
            std::int64_t seen = 0;
            for (const auto& [shape, count] : hist) {
                tv += std::abs(static_cast<double>(count) / static_cast<double>(reps) -
                               1.0 / static_cast<double>(n_shapes));
                ++seen;
            }
            tv += static_cast<double>(n_shapes - seen) / static_cast<double>(n_shapes);
            tv *= 0.5;
            char name[32];
            std::snprintf(name, sizeof(name), "shape_uniform_tv_m%d", m);
            out.push_back(check(name, tv, 0.01, seen <= n_shapes && tv < 0.01, reps, opts, 10));
        }
    }
}

// ------------------------------------------------------------ performance --

void suite_performance(const VerifyOptions& opts, std::vector<CheckResult>& out) {
    const std::int64_t n = 1000000;
    RngStream rng(opts.master_seed, stream_of(11, 0, 0));
    const auto t0 = std::chrono::steady_clock::now();
    const WeightTrace tr = simulate(ModelVariant{ModelKind::L, 2}, SeedGraph{{1}}, n, 3, rng);
    const auto t1 = std::chrono::steady_clock::now();
    const double seconds = std::chrono::duration<double>(t1 - t0).count();
    struct rusage ru;
    getrusage(RUSAGE_SELF, &ru);
    const double peak_mb = static_cast<double>(ru.ru_maxrss) / 1024.0;
    out.push_back(check("l2_sim_1e6_seconds", seconds, 2.0,
                        seconds < 2.0 && tr.n == n, n, opts, 11));
    out.push_back(check("l2_sim_1e6_peak_mb", peak_mb, 200.0, peak_mb < 200.0, n, opts, 11));
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "oracles", "coupling",   "lemma2.3", "limits-equivalence", "mori",
        "identities", "rates", "remy", "performance"};
    return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opts) {
    SuiteResult result;
    result.suite = name;
    const auto t0 = std::chrono::steady_clock::now();
    if (name == "oracles") {
        suite_oracles(opts, result.checks);
    } else if (name == "coupling") {
        suite_coupling(opts, result.checks);
    } else if (name == "lemma2.3") {
        suite_lemma23(opts, result.checks);
    } else if (name == "limits-equivalence") {
        suite_limits_equivalence(opts, result.checks);
    } else if (name == "mori") {
        suite_mori(opts, result.checks);
    } else if (name == "identities") {
        suite_identities(opts, result.checks);
    } else if (name == "rates") {
        suite_rates(opts, result.checks);
    } else if (name == "remy") {
        suite_remy(opts, result.checks);
    } else if (name == "performance") {
        suite_performance(opts, result.checks);
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace prefatt
