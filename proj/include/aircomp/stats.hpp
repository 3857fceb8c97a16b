#pragma once

#include <functional>
#include <vector>

namespace aircomp {

// One-sample Kolmogorov-Smirnov statistic of samples against a CDF.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

// Chi-square upper quantile via bisection on the regularized gamma CDF.
double chi2_quantile(double prob, int dof);

struct Histogram {
    std::vector<double> edges;    // size bins + 1
    std::vector<double> density;  // normalized so that sum(density * width) = 1
    std::vector<long> counts;
    long total = 0;
};

Histogram make_histogram(const std::vector<double>& samples, int bins, double lo, double hi);

struct SummaryStats {
    double mean = 0.0;
    double variance = 0.0;      // unbiased
    double mean_stderr = 0.0;
    double variance_stderr = 0.0;  // moment-based standard error of the sample variance
    long n = 0;
};

SummaryStats summarize(const std::vector<double>& samples);

}  // namespace aircomp
