#pragma once

#include <vector>

#include "prefatt/rng.hpp"

namespace prefatt {

struct GammaParams {
    double shape = 1.0;
    double rate = 1.0;
};

struct BetaParams {
    double a = 1.0;
    double b = 1.0;
};

// Generalized gamma GGa(a, b): density proportional to x^(a-1) exp(-x^b) on
// x > 0. Sampled exclusively via the power transform Gamma(a/b, 1)^(1/b).
struct GgaParams {
    double a = 1.0;
    double b = 1.0;
};

struct DirichletParams {
    std::vector<double> alpha;
};

double sample_normal(RngStream& rng);

// Marsaglia-Tsang; handles shape < 1 via the shape+1 boost.
double sample_gamma(const GammaParams& p, RngStream& rng);

// Ratio of two gammas: G_a / (G_a + G_b).
double sample_beta(const BetaParams& p, RngStream& rng);

double sample_gga(const GgaParams& p, RngStream& rng);

// Normalized independent gammas. A single alpha returns {1.0}.
std::vector<double> sample_dirichlet(const DirichletParams& p, RngStream& rng);

// P(X <= x) for X ~ GGa(a, b).
double gga_cdf(const GgaParams& p, double x);

double beta_cdf(const BetaParams& p, double x);

}  // namespace prefatt
