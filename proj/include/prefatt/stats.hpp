#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "prefatt/rational.hpp"

namespace prefatt {

// Right-continuous empirical CDF.
class Ecdf {
public:
    explicit Ecdf(std::vector<double> samples) : sorted_(std::move(samples)) {
        if (sorted_.empty()) throw std::invalid_argument("Ecdf: no samples");
        std::sort(sorted_.begin(), sorted_.end());
    }

    double operator()(double t) const {
        auto it = std::upper_bound(sorted_.begin(), sorted_.end(), t);
        return static_cast<double>(it - sorted_.begin()) / sorted_.size();
    }

    const std::vector<double>& sorted() const { return sorted_; }

private:
    std::vector<double> sorted_;
};

// One-sample Kolmogorov-Smirnov statistic against a CDF, evaluated exactly at
// the jump points of the empirical CDF (both one-sided gaps at every sample).
template <typename Cdf>
double ks_one_sample(std::vector<double> samples, Cdf&& cdf) {
    if (samples.empty()) throw std::invalid_argument("ks_one_sample: no samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double f = cdf(samples[i]);
        d = std::max(d, f - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - f);
    }
    return d;
}

// Two-sample KS statistic: exact sup over the pooled jump points, tie-safe.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

// Exact total variation distance between two integer-supported pmfs.
Rational tv_distance_exact(const ExactPmf& p, const ExactPmf& q);

struct RateFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rss = 0.0;
};

// Least-squares line through (log n_i, log d_i).
RateFit rate_fit(const std::vector<double>& ns, const std::vector<double>& ds);

struct MomentEstimate {
    double value = 0.0;
    double se = 0.0;
};

// Plug-in q-th moment with its CLT standard error.
MomentEstimate moment_estimate(const std::vector<double>& samples, int q);

}  // namespace prefatt
