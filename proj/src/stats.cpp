#include "prefatt/stats.hpp"

namespace prefatt {

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("ks_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        double t = std::min(a[i], b[j]);
        while (i < a.size() && a[i] == t) ++i;
        while (j < b.size() && b[j] == t) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na -
                                  static_cast<double>(j) / nb));
    }
    return d;
}

Rational tv_distance_exact(const ExactPmf& p, const ExactPmf& q) {
    std::int64_t lo = std::min(p.offset, q.offset);
    std::int64_t hi = std::max(p.offset + static_cast<std::int64_t>(p.probs.size()),
                               q.offset + static_cast<std::int64_t>(q.probs.size()));
    Rational acc(0);
    for (std::int64_t v = lo; v < hi; ++v) {
        Rational diff = p.mass_at(v) - q.mass_at(v);
        if (diff < 0) diff = -diff;
        acc += diff;
    }
    return acc / 2;
}

RateFit rate_fit(const std::vector<double>& ns, const std::vector<double>& ds) {
    if (ns.size() != ds.size())
        throw std::invalid_argument("rate_fit: size mismatch");
    if (ns.size() < 3)
        throw std::invalid_argument("rate_fit: need at least 3 points");
    const std::size_t k = ns.size();
    std::vector<double> x(k), y(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (!(ns[i] > 0.0) || !(ds[i] > 0.0))
            throw std::invalid_argument("rate_fit: values must be positive");
        x[i] = std::log(ns[i]);
        y[i] = std::log(ds[i]);
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= k;
    my /= k;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("rate_fit: degenerate abscissae");
    RateFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    for (std::size_t i = 0; i < k; ++i) {
        double r = y[i] - (fit.intercept + fit.slope * x[i]);
        fit.rss += r * r;
    }
    return fit;
}

MomentEstimate moment_estimate(const std::vector<double>& samples, int q) {
    if (samples.empty()) throw std::invalid_argument("moment_estimate: no samples");
    if (q < 1) throw std::invalid_argument("moment_estimate: q must be >= 1");
    const double n = static_cast<double>(samples.size());
    double mean = 0.0;
    for (double s : samples) mean += std::pow(s, q);
    mean /= n;
    if (samples.size() == 1) return {mean, 0.0};
    double var = 0.0;
    for (double s : samples) {
        double d = std::pow(s, q) - mean;
        var += d * d;
    }
    var /= (n - 1.0);
    return {mean, std::sqrt(var / n)};
}

}  // namespace prefatt
