#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "prefatt/distributions.hpp"
#include "prefatt/rng.hpp"

namespace prefatt {

// Which process the limit belongs to. The graph variants take seed weights
// d_1..d_s; the urn variant takes the initial per-color counts.
enum class LimitVariant { ModelN, ModelL, Urn };

struct LimitSpec {
    LimitVariant variant = LimitVariant::ModelL;
    int ell = 1;
    std::vector<std::int64_t> seed_weights;
    int r = 1;

    std::int64_t s() const { return static_cast<std::int64_t>(seed_weights.size()); }
    std::int64_t m(int k) const;  // cumulative seed weight m_k, 1 <= k <= s
    std::int64_t a(int k) const;  // exponent parameter a_k, k >= s
};

// Validating constructor: the graph variants need r >= s, the urn variant
// r > s, every seed weight >= 1.
LimitSpec limit_params(LimitVariant variant, int ell,
                       std::vector<std::int64_t> seed_weights, int r);

// Parameters of the k-th factor of the limit product:
// B_k ~ Beta(a, beta_second) for k < r and Z_r ~ GGa(a, gga_power) at k = r.
struct LimitFactorParams {
    std::int64_t a = 0;
    std::int64_t beta_second = 1;
    int gga_power = 2;
};

LimitFactorParams beta_factor(const LimitSpec& spec, int k);

// Z are the cumulative-coordinate limits, Y their increments
// (Y_1 = Z_1, Y_k = Z_k - Z_{k-1}).
struct LimitVector {
    std::vector<double> z;
    std::vector<double> y;
};

// Beta-product representation: Z_r ~ GGa(a_r, ell+1), Z_k = B_k ... B_{r-1} Z_r.
LimitVector sample_limit_z(const LimitSpec& spec, RngStream& rng);

// Gamma-sum representation for the single-parameter seeds (a loop-free chain
// start d_1, or equivalently the two-vertex start (d_1, 1) of the excluded
// variant): Z_k = (X_1 + ... + X_k)^(1/(ell+1)) with X_1 ~ Gamma(d_1/(ell+1), 1)
// and X_k ~ Exp(1) for k >= 2.
LimitVector sample_limit_gamma_rep(std::int64_t d1, int ell, int r, RngStream& rng);

// Dirichlet representation at r = s: Y = Z_s * X with X ~ Dir(d_1..d_s) and
// Z_s ~ GGa(a_s, ell+1).
LimitVector sample_limit_dirichlet_rep(const LimitSpec& spec, RngStream& rng);

// Max of the first r_trunc increments of the limit.
double sample_max_limit(const LimitSpec& spec, int r_trunc, RngStream& rng);
double sample_max_limit_gamma(std::int64_t d1, int ell, int r_trunc, RngStream& rng);

// Consecutive cumulative-coordinate ratios tau_j = Z_j / Z_{j+1},
// j = 1..r-1. In the unit-pair-seed excluded model with ell = 1 these are
// independent Beta(2j-1, 1). Returns an empty list when r < 2.
std::vector<double> mori_tau(const LimitVector& v);

// Distributional identities for the square-root gamma increments.
// Variant N (i >= 2): sqrt(X_half + X_1 + ... + X_{i-1}) - sqrt(X_half + ... + X_{i-2})
//   equals sqrt(G * B) in law, G ~ Exp(1), B ~ Beta(1/2, i - 3/2).
// Variant L (i >= 1): sqrt(X_1 + ... + X_i) - sqrt(X_1 + ... + X_{i-1})
//   equals sqrt(G * B) in law, B ~ Beta(1/2, i - 1) and B := 1 at i = 1.
enum class IdentityModel { N, L };
enum class IdentitySide { Lhs, Rhs };

double identity_lhs_sample(IdentityModel model, int i, RngStream& rng);
double identity_rhs_sample(IdentityModel model, int i, RngStream& rng);

// Analytic E[(G * B)^(q/2)] = Gamma(1+q/2) Gamma(a+q/2) Gamma(a+b) /
// (Gamma(a) Gamma(a+b+q/2)) with a = 1/2 and b as above.
double identity_moment(IdentityModel model, int i, int q);

struct IdentitySampler {
    IdentityModel model;
    IdentitySide side;
    int i;
    double sample(RngStream& rng) const;
};

// Sampler plus the analytic q-th moment shared by both sides.
std::pair<IdentitySampler, double> identity_sampler_and_moments(IdentityModel model,
                                                                IdentitySide side,
                                                                int i, int q);

}  // namespace prefatt
