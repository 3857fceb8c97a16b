#include "aircomp/analytics.hpp"

#include <cmath>
#include <stdexcept>

#include "aircomp/quadrature.hpp"
#include "aircomp/special.hpp"
#include "aircomp/stats.hpp"

namespace aircomp {

namespace {

void check_cfg(const ChannelConfig& cfg) {
    if (!(cfg.alpha > 0.0)) throw std::invalid_argument("ChannelConfig: alpha must be > 0");
    if (cfg.n_abs < 5) throw std::invalid_argument("ChannelConfig: N must be >= 5");
    if (!(cfg.radius_m > 0.0)) throw std::invalid_argument("ChannelConfig: R must be > 0");
}

// the conditional-interference ops are well defined down to the
// empty-interferer edge N = 4
void check_cfg_interference(const ChannelConfig& cfg) {
    if (!(cfg.alpha > 0.0)) throw std::invalid_argument("ChannelConfig: alpha must be > 0");
    if (cfg.n_abs < 4) throw std::invalid_argument("ChannelConfig: N must be >= 4");
    if (!(cfg.radius_m > 0.0)) throw std::invalid_argument("ChannelConfig: R must be > 0");
}

double coherent_signal_power(double alpha, const OrderedDistances& r) {
    const double s = std::pow(r.r1, -alpha / 2.0) + std::pow(r.r2, -alpha / 2.0) +
                     std::pow(r.r3, -alpha / 2.0) + std::pow(r.r4, -alpha / 2.0);
    return s * s;
}

// (R^p - d^p) / p, continuous through p = 0 where it tends to ln(R/d)
double power_diff_over_p(double p, double d, double R) {
    const double L = std::log(R / d);
    if (p == 0.0) return L;
    return std::pow(d, p) * std::expm1(p * L) / p;
}

BppParams to_bpp(const ChannelConfig& cfg) { return {cfg.n_abs, cfg.radius_m}; }

}  // namespace

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

double mgf_signal_general(const ChannelConfig& cfg, const OrderedDistances& r, double z) {
    check_cfg(cfg);
    if (!(z >= 0.0)) throw std::invalid_argument("mgf_signal_general: z >= 0");
    return std::exp(-z * coherent_signal_power(cfg.alpha, r));
}

double mgf_interference_thinned(const ChannelConfig& cfg, double d4, double z, double eta) {
    check_cfg_interference(cfg);
    if (!(d4 > 0.0) || d4 >= cfg.radius_m)
        throw std::domain_error("mgf_interference: d4 must be in (0, R)");
    if (!(z >= 0.0)) throw std::invalid_argument("mgf_interference: z >= 0");
    if (!(eta >= 1.0)) throw std::invalid_argument("mgf_interference: eta >= 1");
    const double exponent = (cfg.n_abs - 4.0) / eta;
    if (exponent == 0.0) return 1.0;
    if (z == 0.0) return 1.0;
    const double a = cfg.alpha;
    const double R = cfg.radius_m;
    const double v = (3.0 + a) / a;
    const double R3 = R * R * R, d3 = d4 * d4 * d4;
    const double base = 3.0 / (a * (R3 - d3)) *
                        (R3 * generalized_expint(v, z * std::pow(R, -a)) -
                         d3 * generalized_expint(v, z * std::pow(d4, -a)));
    // a moment generating function of a nonnegative variable lives in [0, 1]
    const double clamped = std::min(std::max(base, 0.0), 1.0);
    return std::pow(clamped, exponent);
}

double mgf_interference_general(const ChannelConfig& cfg, double d4, double z) {
    return mgf_interference_thinned(cfg, d4, z, 1.0);
}

std::pair<double, double> interference_moments(const ChannelConfig& cfg, double d) {
    check_cfg_interference(cfg);
    if (!(d > 0.0) || d >= cfg.radius_m)
        throw std::domain_error("interference_moments: d must be in (0, R)");
    const double n_i = cfg.n_abs - 4.0;
    if (n_i == 0.0) return {0.0, 0.0};
    const double R = cfg.radius_m, a = cfg.alpha;
    const double vol = R * R * R - d * d * d;
    const double m1 = 3.0 * power_diff_over_p(3.0 - a, d, R) / vol;
    const double m2 = 3.0 * power_diff_over_p(3.0 - 2.0 * a, d, R) / vol;
    return {n_i * m1, n_i * (m2 - m1 * m1)};
}

GammaApproxParams gamma_approx_params(const ChannelConfig& cfg, double d) {
    const auto [mean, var] = interference_moments(cfg, d);
    if (!(mean > 0.0) || !(var > 0.0))
        throw std::domain_error("gamma_approx_params: needs at least one interferer");
    return {mean * mean / var, var / mean};
}

namespace detail {

double conditional_rate_integral(double signal_power, const std::function<double(double)>& mgf_i,
                                 double rel_tol) {
    if (!(signal_power > 0.0))
        throw std::invalid_argument("conditional_rate_integral: signal power must be > 0");
    // substitute z = z* e^t: integrand dt is (1 - e^(-zS)) M_I(z)
    const double z_star = std::log(2.0) / signal_power;
    auto g = [&](double t) {
        const double z = z_star * std::exp(t);
        return -std::expm1(-z * signal_power) * mgf_i(z);
    };
    double acc = 0.0;
    for (int dir : {+1, -1}) {
        int quiet = 0;
        for (int k = 0; k < 90; ++k) {
            const double t0 = dir > 0 ? static_cast<double>(k) : -static_cast<double>(k + 1);
            const double piece = integrate(g, t0, t0 + 1.0, 1e-9, 1e-14).value;
            acc += piece;
            if (std::fabs(piece) < rel_tol * std::fabs(acc) * 0.01) {
                if (++quiet >= 2) break;
            } else {
                quiet = 0;
            }
        }
    }
    if (!std::isfinite(acc))
        throw std::runtime_error("conditional_rate_integral: non-finite result");
    return acc;
}

}  // namespace detail

namespace {

MetricEstimate rate_general_impl(const ChannelConfig& cfg, double eta, int mc_outer_samples,
                                 std::uint64_t seed) {
    check_cfg(cfg);
    if (mc_outer_samples < 1000)
        throw std::invalid_argument("rate_general: mc_outer_samples must be >= 1000");
    const auto bpp = to_bpp(cfg);
    std::vector<double> vals(static_cast<std::size_t>(mc_outer_samples));
    for (int i = 0; i < mc_outer_samples; ++i) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(i));
        const OrderedDistances r = sample_ordered_nearest4(bpp, rng);
        const double S = coherent_signal_power(cfg.alpha, r);
        auto mgf = [&](double z) { return mgf_interference_thinned(cfg, r.r4, z, eta); };
        vals[static_cast<std::size_t>(i)] = detail::conditional_rate_integral(S, mgf) / eta;
    }
    const auto s = summarize(vals);
    return {s.mean, s.mean_stderr, MetricEstimate::Kind::monte_carlo};
}

}  // namespace

MetricEstimate rate_general(const ChannelConfig& cfg, int mc_outer_samples, std::uint64_t seed) {
    return rate_general_impl(cfg, 1.0, mc_outer_samples, seed);
}

MetricEstimate rate_general_thinned(const ChannelConfig& cfg, double eta, int mc_outer_samples,
                                    std::uint64_t seed) {
    if (!(eta >= 1.0)) throw std::invalid_argument("rate_general_thinned: eta >= 1");
    return rate_general_impl(cfg, eta, mc_outer_samples, seed);
}

GeneralCoverageCurve::GeneralCoverageCurve(const ChannelConfig& cfg, int mc_outer_samples,
                                           std::uint64_t seed) {
    check_cfg(cfg);
    if (mc_outer_samples < 1000)
        throw std::invalid_argument("coverage_general: mc_outer_samples must be >= 1000");
    const auto bpp = to_bpp(cfg);
    signal_power_.resize(static_cast<std::size_t>(mc_outer_samples));
    shape_.resize(static_cast<std::size_t>(mc_outer_samples));
    scale_.resize(static_cast<std::size_t>(mc_outer_samples));
    for (int i = 0; i < mc_outer_samples; ++i) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(i));
        const OrderedDistances r = sample_ordered_nearest4(bpp, rng);
        signal_power_[static_cast<std::size_t>(i)] = coherent_signal_power(cfg.alpha, r);
        const auto g = gamma_approx_params(cfg, r.r4);
        shape_[static_cast<std::size_t>(i)] = g.shape;
        scale_[static_cast<std::size_t>(i)] = g.scale;
    }
}

MetricEstimate GeneralCoverageCurve::at(double gamma_threshold) const {
    if (!(gamma_threshold > 0.0))
        throw std::invalid_argument("coverage_general: gamma threshold must be > 0");
    std::vector<double> vals(signal_power_.size());
    for (std::size_t i = 0; i < signal_power_.size(); ++i) {
        const double x = signal_power_[i] / (gamma_threshold * scale_[i]);
        vals[i] = reg_lower_incomplete_gamma(shape_[i], x);
    }
    const auto s = summarize(vals);
    return {s.mean, s.mean_stderr, MetricEstimate::Kind::monte_carlo};
}

MetricEstimate coverage_general(const ChannelConfig& cfg, double gamma_threshold,
                                int mc_outer_samples, std::uint64_t seed) {
    const GeneralCoverageCurve curve(cfg, mc_outer_samples, seed);
    return curve.at(gamma_threshold);
}

double rate_from_coverage(const std::function<double(double)>& coverage, double rel_tol) {
    auto g = [&](double t) {
        const double omt = 1.0 - t;
        return coverage(t / omt) / omt;
    };
    const auto q = integrate(g, 0.0, 1.0 - 1e-12, rel_tol, 1e-12);
    if (!std::isfinite(q.value) || q.error > 100.0 * rel_tol * std::fabs(q.value) + 1e-9)
        throw std::runtime_error("rate_from_coverage: quadrature did not converge");
    return q.value;
}

namespace {

MetricEstimate worst_case_metric(const ChannelConfig& cfg,
                                 const std::function<double(double)>& conditional,
                                 bool is_probability) {
    check_cfg(cfg);
    const auto bpp = to_bpp(cfg);
    auto integrand = [&](double x) {
        const double f = equidistant_pdf(bpp, 4, x);
        return f > 0.0 ? f * conditional(x) : 0.0;
    };
    const auto q = integrate(integrand, 0.0, cfg.radius_m, 1e-7, 1e-12);
    if (!std::isfinite(q.value) || q.error > 1e-4 * std::fabs(q.value) + 1e-9)
        throw std::runtime_error("worst-case quadrature did not converge");
    const double value = is_probability ? std::min(std::max(q.value, 0.0), 1.0) : q.value;
    return {value, q.error, MetricEstimate::Kind::analytic};
}

}  // namespace

MetricEstimate rate_worst_thinned(const ChannelConfig& cfg, double eta) {
    if (!(eta >= 1.0)) throw std::invalid_argument("rate_worst_thinned: eta >= 1");
    return worst_case_metric(
        cfg,
        [&](double x) {
            const double S = 16.0 * std::pow(x, -cfg.alpha);
            auto mgf = [&](double z) { return mgf_interference_thinned(cfg, x, z, eta); };
            return detail::conditional_rate_integral(S, mgf) / eta;
        },
        false);
}

MetricEstimate rate_worst(const ChannelConfig& cfg) { return rate_worst_thinned(cfg, 1.0); }

MetricEstimate coverage_worst(const ChannelConfig& cfg, double gamma_threshold) {
    if (!(gamma_threshold > 0.0))
        throw std::invalid_argument("coverage_worst: gamma threshold must be > 0");
    return worst_case_metric(
        cfg,
        [&](double x) {
            const auto g = gamma_approx_params(cfg, x);
            const double arg = 16.0 * std::pow(x, -cfg.alpha) / (gamma_threshold * g.scale);
            return reg_lower_incomplete_gamma(g.shape, arg);
        },
        true);
}

PppMeanInterference mean_total_interference_ppp(double lambda, double alpha, double r_min,
                                                double r_max) {
    if (!(lambda > 0.0)) throw std::invalid_argument("mean_total_interference_ppp: lambda > 0");
    if (!(r_min >= 0.0) || !(r_max > r_min))
        throw std::invalid_argument("mean_total_interference_ppp: need 0 <= r_min < r_max");
    const bool inf_max = std::isinf(r_max);
    auto antiderivative = [&](double r) {
        if (alpha == 3.0) return 4.0 * M_PI * lambda * std::log(r);
        return 4.0 * M_PI * lambda * std::pow(r, 3.0 - alpha) / (3.0 - alpha);
    };
    // divergence cases: upper limit with alpha <= 3, lower limit 0 with alpha >= 3
    if (inf_max && alpha <= 3.0) return {true, 0.0};
    if (r_min == 0.0 && alpha >= 3.0) return {true, 0.0};
    const double hi = inf_max ? 0.0 : antiderivative(r_max);
    const double lo = r_min == 0.0 ? 0.0 : antiderivative(r_min);
    return {false, hi - lo};
}

}  // namespace aircomp
