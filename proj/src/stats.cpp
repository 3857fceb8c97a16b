#include "aircomp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aircomp/special.hpp"

namespace aircomp {

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw std::invalid_argument("ks_statistic: no samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double F = cdf(samples[i]);
        d = std::max(d, std::fabs(F - static_cast<double>(i) / n));
        d = std::max(d, std::fabs(static_cast<double>(i + 1) / n - F));
    }
    return d;
}

double chi2_quantile(double prob, int dof) {
    if (!(prob > 0.0 && prob < 1.0)) throw std::invalid_argument("chi2_quantile: prob in (0,1)");
    if (dof < 1) throw std::invalid_argument("chi2_quantile: dof >= 1");
    double lo = 0.0, hi = 10.0 * dof + 100.0;
    while (reg_lower_incomplete_gamma(dof / 2.0, hi / 2.0) < prob) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (reg_lower_incomplete_gamma(dof / 2.0, mid / 2.0) < prob)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

Histogram make_histogram(const std::vector<double>& samples, int bins, double lo, double hi) {
    if (bins < 1) throw std::invalid_argument("make_histogram: bins >= 1");
    if (!(hi > lo)) throw std::invalid_argument("make_histogram: hi > lo");
    Histogram h;
    h.edges.resize(static_cast<std::size_t>(bins) + 1);
    for (int i = 0; i <= bins; ++i)
        h.edges[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / bins;
    h.counts.assign(static_cast<std::size_t>(bins), 0);
    const double width = (hi - lo) / bins;
    for (double x : samples) {
        if (x < lo || x >= hi) continue;
        auto b = static_cast<std::size_t>((x - lo) / width);
        if (b >= static_cast<std::size_t>(bins)) b = static_cast<std::size_t>(bins) - 1;
        h.counts[b]++;
        h.total++;
    }
    h.density.resize(static_cast<std::size_t>(bins));
    for (int i = 0; i < bins; ++i)
        h.density[static_cast<std::size_t>(i)] =
            h.total > 0 ? static_cast<double>(h.counts[static_cast<std::size_t>(i)]) /
                              (static_cast<double>(h.total) * width)
                        : 0.0;
    return h;
}

SummaryStats summarize(const std::vector<double>& samples) {
    if (samples.size() < 2) throw std::invalid_argument("summarize: need >= 2 samples");
    SummaryStats s;
    s.n = static_cast<long>(samples.size());
    const double n = static_cast<double>(s.n);
    double acc = 0.0;
    for (double x : samples) acc += x;
    s.mean = acc / n;
    double m2 = 0.0, m4 = 0.0;
    for (double x : samples) {
        const double d = x - s.mean;
        m2 += d * d;
        m4 += d * d * d * d;
    }
    s.variance = m2 / (n - 1.0);
    s.mean_stderr = std::sqrt(s.variance / n);
    const double mu2 = m2 / n, mu4 = m4 / n;
    const double var_of_var = (mu4 - mu2 * mu2) / n;  // large-n approximation
    s.variance_stderr = var_of_var > 0 ? std::sqrt(var_of_var) : 0.0;
    return s;
}

}  // namespace aircomp
