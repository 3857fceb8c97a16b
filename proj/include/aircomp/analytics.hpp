#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "aircomp/distance_dist.hpp"

namespace aircomp {

struct ChannelConfig {
    double alpha = 2.0;    // path loss exponent
    int n_abs = 0;         // N
    double radius_m = 0.0; // R
};

// Moment-matched Gamma parameters of the conditional interference power.
struct GammaApproxParams {
    double shape = 0.0;  // v(d)
    double scale = 0.0;  // theta(d), units m^-alpha
};

struct MetricEstimate {
    enum class Kind { analytic, monte_carlo };
    double value = 0.0;
    double error = 0.0;  // MC standard error, or quadrature error bound
    Kind kind = Kind::analytic;
};

double db_to_linear(double db);
double linear_to_db(double lin);

// MGF of the coherent joint-transmission signal power at log-argument z.
double mgf_signal_general(const ChannelConfig& cfg, const OrderedDistances& r, double z);

// Closed-form MGF of the aggregate interference conditioned on the serving
// distance d4, via the generalized exponential integral of order (3+a)/a.
double mgf_interference_general(const ChannelConfig& cfg, double d4, double z);

// Same with the interferer count thinned by a reuse factor eta (exponent
// (N-4)/eta instead of N-4).
double mgf_interference_thinned(const ChannelConfig& cfg, double d4, double z, double eta);

// Conditional mean and variance of the aggregate interference given the
// serving distance d (closed forms, continuous across alpha = 3).
std::pair<double, double> interference_moments(const ChannelConfig& cfg, double d);

GammaApproxParams gamma_approx_params(const ChannelConfig& cfg, double d);

// Achievable data rate of the general aUE (nats/s/Hz): Monte Carlo over the
// ordered-distance law with a deterministic inner log-argument integral.
MetricEstimate rate_general(const ChannelConfig& cfg, int mc_outer_samples, std::uint64_t seed);

// Variant with reuse factor eta applied (prefactor 1/eta, thinned MGF).
MetricEstimate rate_general_thinned(const ChannelConfig& cfg, double eta, int mc_outer_samples,
                                    std::uint64_t seed);

// Coverage probability of the general aUE at a linear SIR threshold.
MetricEstimate coverage_general(const ChannelConfig& cfg, double gamma_threshold,
                                int mc_outer_samples, std::uint64_t seed);

// Precomputed per-sample state so coverage can be swept over thresholds (and
// integrated) with the identical sample set.
class GeneralCoverageCurve {
  public:
    GeneralCoverageCurve(const ChannelConfig& cfg, int mc_outer_samples, std::uint64_t seed);
    MetricEstimate at(double gamma_threshold) const;
    double operator()(double gamma_threshold) const { return at(gamma_threshold).value; }
    int samples() const { return static_cast<int>(signal_power_.size()); }

  private:
    std::vector<double> signal_power_;  // |sum d_i^(-a/2)|^2 per sample
    std::vector<double> shape_;
    std::vector<double> scale_;
};

// Rate from a coverage function: int_0^inf P(gamma)/(1+gamma) dgamma,
// evaluated after the substitution gamma = t/(1-t).
double rate_from_coverage(const std::function<double(double)>& coverage, double rel_tol = 1e-7);

// Worst-case aUE (equidistant servers): deterministic 1D outer quadrature.
MetricEstimate rate_worst(const ChannelConfig& cfg);
MetricEstimate rate_worst_thinned(const ChannelConfig& cfg, double eta);
MetricEstimate coverage_worst(const ChannelConfig& cfg, double gamma_threshold);

// Mean total interference of an infinite/finite PPP shell (the divergence
// diagnostic): 4 pi lambda r^(3-a)/(3-a) or 4 pi lambda ln r between limits.
struct PppMeanInterference {
    bool divergent = false;
    double value = 0.0;
};
PppMeanInterference mean_total_interference_ppp(double lambda, double alpha, double r_min,
                                                double r_max);

namespace detail {
// Inner integral of the rate theorems: int_0^inf (1 - e^(-z S)) M_I(z) dz/z,
// split at z* = ln2/S and integrated over log-spaced panels.
double conditional_rate_integral(double signal_power, const std::function<double(double)>& mgf_i,
                                 double rel_tol = 1e-6);
}  // namespace detail

}  // namespace aircomp
