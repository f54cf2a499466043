#include "prefatt/distributions.hpp"

#include <cmath>
#include <stdexcept>

#include "prefatt/special.hpp"

namespace prefatt {

double sample_normal(RngStream& rng) {
    for (;;) {
        double u = 2.0 * rng.uniform() - 1.0;
        double v = 2.0 * rng.uniform() - 1.0;
        double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) {
            return u * std::sqrt(-2.0 * std::log(s) / s);
        }
    }
}

namespace {

double sample_std_gamma(double shape, RngStream& rng) {
    if (shape < 1.0) {
        double g = sample_std_gamma(shape + 1.0, rng);
        return g * std::pow(rng.uniform_open(), 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = sample_normal(rng);
        double t = 1.0 + c * x;
        if (t <= 0.0) continue;
        double v = t * t * t;
        double u = rng.uniform_open();
        double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

}  // namespace

double sample_gamma(const GammaParams& p, RngStream& rng) {
    if (!(p.shape > 0.0) || !(p.rate > 0.0))
        throw std::invalid_argument("gamma: shape and rate must be > 0");
    return sample_std_gamma(p.shape, rng) / p.rate;
}

double sample_beta(const BetaParams& p, RngStream& rng) {
    if (!(p.a > 0.0) || !(p.b > 0.0))
        throw std::invalid_argument("beta: a and b must be > 0");
    double x = sample_std_gamma(p.a, rng);
    double y = sample_std_gamma(p.b, rng);
    return x / (x + y);
}

double sample_gga(const GgaParams& p, RngStream& rng) {
    if (!(p.a > 0.0) || !(p.b > 0.0))
        throw std::invalid_argument("gga: a and b must be > 0");
    return std::pow(sample_std_gamma(p.a / p.b, rng), 1.0 / p.b);
}

std::vector<double> sample_dirichlet(const DirichletParams& p, RngStream& rng) {
    if (p.alpha.empty()) throw std::invalid_argument("dirichlet: empty alpha");
    std::vector<double> out(p.alpha.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < p.alpha.size(); ++i) {
        if (!(p.alpha[i] > 0.0))
            throw std::invalid_argument("dirichlet: alpha must be > 0");
        out[i] = sample_std_gamma(p.alpha[i], rng);
        sum += out[i];
    }
    for (double& x : out) x /= sum;
    return out;
}

double gga_cdf(const GgaParams& p, double x) {
    if (!(p.a > 0.0) || !(p.b > 0.0))
        throw std::invalid_argument("gga: a and b must be > 0");
    if (x <= 0.0) return 0.0;
    return regularized_lower_incomplete_gamma(p.a / p.b, std::pow(x, p.b));
}

double beta_cdf(const BetaParams& p, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return regularized_incomplete_beta(p.a, p.b, x);
}

}  // namespace prefatt
