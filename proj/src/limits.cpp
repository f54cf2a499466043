#include "prefatt/limits.hpp"

#include <cmath>
#include <utility>
#include <stdexcept>

namespace prefatt {

namespace {

void validate_spec(const LimitSpec& spec) {
    if (spec.ell < 1) throw std::invalid_argument("ell must be >= 1");
    if (spec.seed_weights.empty()) throw std::invalid_argument("empty seed weights");
    for (std::int64_t w : spec.seed_weights)
        if (w < 1) throw std::invalid_argument("seed weights must be >= 1");
    std::int64_t s = spec.s();
    if (spec.variant == LimitVariant::Urn) {
        if (spec.r <= s) throw std::invalid_argument("urn limit needs r > s");
    } else {
        if (spec.r < s) throw std::invalid_argument("graph limit needs r >= s");
    }
}

}  // namespace

std::int64_t LimitSpec::m(int k) const {
    if (k < 1 || k > s()) throw std::invalid_argument("m_k: k out of range");
    std::int64_t acc = 0;
    for (int i = 0; i < k; ++i) acc += seed_weights[static_cast<std::size_t>(i)];
    return acc;
}

std::int64_t LimitSpec::a(int k) const {
    std::int64_t sv = s();
    if (k < sv) throw std::invalid_argument("a_k: k below s");
    std::int64_t ms = m(static_cast<int>(sv));
    std::int64_t base = ms + (static_cast<std::int64_t>(ell) + 1) * (k - sv);
    return variant == LimitVariant::ModelL ? base : base + ell;
}

LimitSpec limit_params(LimitVariant variant, int ell,
                       std::vector<std::int64_t> seed_weights, int r) {
    LimitSpec spec;
    spec.variant = variant;
    spec.ell = ell;
    spec.seed_weights = std::move(seed_weights);
    spec.r = r;
    validate_spec(spec);
    return spec;
}

LimitFactorParams beta_factor(const LimitSpec& spec, int k) {
    validate_spec(spec);
    if (k < 1 || k > spec.r) throw std::invalid_argument("limit_params: k out of range");
    LimitFactorParams p;
    p.gga_power = spec.ell + 1;
    if (k < spec.s()) {
        p.a = spec.m(k);
        p.beta_second = spec.seed_weights[static_cast<std::size_t>(k)];
    } else {
        p.a = spec.a(k);
        p.beta_second = 1;
    }
    return p;
}

namespace {

LimitVector finish_from_z(std::vector<double> z) {
    LimitVector v;
    v.y.resize(z.size());
    for (std::size_t i = 0; i < z.size(); ++i)
        v.y[i] = i == 0 ? z[i] : z[i] - z[i - 1];
    v.z = std::move(z);
    return v;
}

}  // namespace

LimitVector sample_limit_z(const LimitSpec& spec, RngStream& rng) {
    validate_spec(spec);
    const int r = spec.r;
    LimitFactorParams tail = beta_factor(spec, r);
    std::vector<double> z(static_cast<std::size_t>(r));
    z[static_cast<std::size_t>(r - 1)] = sample_gga(
        {static_cast<double>(tail.a), static_cast<double>(tail.gga_power)}, rng);
    for (int k = r - 1; k >= 1; --k) {
        LimitFactorParams f = beta_factor(spec, k);
        double b = sample_beta(
            {static_cast<double>(f.a), static_cast<double>(f.beta_second)}, rng);
        z[static_cast<std::size_t>(k - 1)] = b * z[static_cast<std::size_t>(k)];
    }
    return finish_from_z(std::move(z));
}

LimitVector sample_limit_gamma_rep(std::int64_t d1, int ell, int r, RngStream& rng) {
    if (ell < 1) throw std::invalid_argument("ell must be >= 1");
    if (d1 < 1) throw std::invalid_argument("d1 must be >= 1");
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    const double inv = 1.0 / (ell + 1.0);
    double sum = sample_gamma({static_cast<double>(d1) * inv, 1.0}, rng);
    std::vector<double> z(static_cast<std::size_t>(r));
    z[0] = std::pow(sum, inv);
    for (int k = 2; k <= r; ++k) {
        sum += sample_gamma({1.0, 1.0}, rng);
        z[static_cast<std::size_t>(k - 1)] = std::pow(sum, inv);
    }
    return finish_from_z(std::move(z));
}

LimitVector sample_limit_dirichlet_rep(const LimitSpec& spec, RngStream& rng) {
    validate_spec(spec);
    if (spec.r != spec.s())
        throw std::invalid_argument("dirichlet representation needs r == s");
    LimitFactorParams tail = beta_factor(spec, spec.r);
    double zs = sample_gga(
        {static_cast<double>(tail.a), static_cast<double>(tail.gga_power)}, rng);
    DirichletParams dp;
    dp.alpha.reserve(spec.seed_weights.size());
    for (std::int64_t w : spec.seed_weights) dp.alpha.push_back(static_cast<double>(w));
    std::vector<double> x = sample_dirichlet(dp, rng);
    LimitVector v;
    v.y.resize(x.size());
    v.z.resize(x.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        v.y[i] = zs * x[i];
        acc += v.y[i];
        v.z[i] = acc;
    }
    return v;
}

double sample_max_limit(const LimitSpec& spec, int r_trunc, RngStream& rng) {
    if (r_trunc < 1) throw std::invalid_argument("r_trunc must be >= 1");
    LimitSpec wide = spec;
    wide.r = r_trunc;
    LimitVector v = sample_limit_z(wide, rng);
    double mx = v.y[0];
    for (double y : v.y) mx = std::max(mx, y);
    return mx;
}

double sample_max_limit_gamma(std::int64_t d1, int ell, int r_trunc, RngStream& rng) {
    if (r_trunc < 1) throw std::invalid_argument("r_trunc must be >= 1");
    LimitVector v = sample_limit_gamma_rep(d1, ell, r_trunc, rng);
    double mx = v.y[0];
    for (double y : v.y) mx = std::max(mx, y);
    return mx;
}

std::vector<double> mori_tau(const LimitVector& v) {
    if (v.z.size() < 2) return {};
    std::vector<double> tau(v.z.size() - 1);
    for (std::size_t j = 1; j < v.z.size(); ++j) tau[j - 1] = v.z[j - 1] / v.z[j];
    return tau;
}

namespace {

void check_identity_index(IdentityModel model, int i) {
    if (model == IdentityModel::N && i < 2)
        throw std::invalid_argument("identity variant N needs i >= 2");
    if (model == IdentityModel::L && i < 1)
        throw std::invalid_argument("identity variant L needs i >= 1");
}

double identity_beta_second(IdentityModel model, int i) {
    return model == IdentityModel::N ? i - 1.5 : i - 1.0;
}

}  // namespace

double identity_lhs_sample(IdentityModel model, int i, RngStream& rng) {
    check_identity_index(model, i);
    double sum = 0.0;
    int extra;
    if (model == IdentityModel::N) {
        sum = sample_gamma({0.5, 1.0}, rng);
        extra = i - 2;
    } else {
        extra = i - 1;
    }
    for (int j = 0; j < extra; ++j) sum += sample_gamma({1.0, 1.0}, rng);
    double lo = std::sqrt(sum);
    sum += sample_gamma({1.0, 1.0}, rng);
    return std::sqrt(sum) - lo;
}

double identity_rhs_sample(IdentityModel model, int i, RngStream& rng) {
    check_identity_index(model, i);
    double g = sample_gamma({1.0, 1.0}, rng);
    double b = identity_beta_second(model, i);
    double beta = b <= 0.0 ? 1.0 : sample_beta({0.5, b}, rng);
    return std::sqrt(g * beta);
}

double identity_moment(IdentityModel model, int i, int q) {
    check_identity_index(model, i);
    if (q < 1) throw std::invalid_argument("identity_moment: q must be >= 1");
    const double h = 0.5 * q;
    const double b = identity_beta_second(model, i);
    double v = std::lgamma(1.0 + h);
    if (b > 0.0) {
        const double a = 0.5;
        v += std::lgamma(a + h) + std::lgamma(a + b) - std::lgamma(a) -
             std::lgamma(a + b + h);
    }
    return std::exp(v);
}

double IdentitySampler::sample(RngStream& rng) const {
    return side == IdentitySide::Lhs ? identity_lhs_sample(model, i, rng)
                                     : identity_rhs_sample(model, i, rng);
}

std::pair<IdentitySampler, double> identity_sampler_and_moments(IdentityModel model,
                                                                IdentitySide side,
                                                                int i, int q) {
    return {IdentitySampler{model, side, i}, identity_moment(model, i, q)};
}

}  // namespace prefatt
