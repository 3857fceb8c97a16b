#include "aircomp/distance_dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "aircomp/special.hpp"

namespace aircomp {

namespace {

void check_params(const BppParams& p) {
    if (p.n_abs < 5) throw std::invalid_argument("BppParams: N must be >= 5");
    if (!(p.radius > 0.0)) throw std::invalid_argument("BppParams: R must be > 0");
}

void check_range(const BppParams& p, double r, const char* what) {
    if (!(r >= 0.0) || r > p.radius) throw std::domain_error(std::string(what) + ": r outside [0, R]");
}

}  // namespace

double nearest_cdf(const BppParams& p, double r) {
    check_params(p);
    check_range(p, r, "nearest_cdf");
    const double u = r / p.radius;
    return u * u * u;
}

double nearest_pdf(const BppParams& p, double r) {
    check_params(p);
    check_range(p, r, "nearest_pdf");
    return 3.0 * r * r / (p.radius * p.radius * p.radius);
}

double interferer_pdf_conditional(const BppParams& p, double serving_r, double r) {
    check_params(p);
    if (!(serving_r >= 0.0) || serving_r > p.radius)
        throw std::domain_error("interferer_pdf_conditional: serving distance outside [0, R]");
    if (r < serving_r || r > p.radius)
        throw std::domain_error("interferer_pdf_conditional: r outside [serving_r, R]");
    const double R3 = p.radius * p.radius * p.radius;
    return 3.0 * r * r / (R3 - serving_r * serving_r * serving_r);
}

double log_joint_pdf_4nearest(const BppParams& p, const OrderedDistances& r) {
    check_params(p);
    if (!(r.r1 > 0.0 && r.r1 < r.r2 && r.r2 < r.r3 && r.r3 < r.r4 && r.r4 <= p.radius))
        throw std::domain_error("joint_pdf_4nearest: need 0 < r1 < r2 < r3 < r4 <= R");
    const double n = p.n_abs;
    const double u4 = std::pow(r.r4 / p.radius, 3.0);
    double log_f = log_gamma_fn(n + 1.0) - log_gamma_fn(n - 3.0) + (n - 4.0) * std::log1p(-u4);
    const double logR3 = 3.0 * std::log(p.radius);
    for (double ri : {r.r1, r.r2, r.r3, r.r4})
        log_f += std::log(3.0) + 2.0 * std::log(ri) - logR3;
    return log_f;
}

double joint_pdf_4nearest(const BppParams& p, const OrderedDistances& r) {
    return std::exp(log_joint_pdf_4nearest(p, r));
}

double log_fourth_nearest_pdf(const BppParams& p, double r4) {
    check_params(p);
    check_range(p, r4, "fourth_nearest_pdf");
    if (r4 == 0.0) return -std::numeric_limits<double>::infinity();
    const double n = p.n_abs;
    const double u = std::pow(r4 / p.radius, 3.0);
    // N!/(3!(N-4)!) F^3 (1-F)^(N-4) f
    return log_gamma_fn(n + 1.0) - std::log(6.0) - log_gamma_fn(n - 3.0) + 3.0 * std::log(u) +
           (n - 4.0) * std::log1p(-u) + std::log(3.0 * r4 * r4) - 3.0 * std::log(p.radius);
}

double fourth_nearest_pdf(const BppParams& p, double r4) {
    if (r4 == 0.0) {
        check_params(p);
        return 0.0;
    }
    const double lf = log_fourth_nearest_pdf(p, r4);
    return std::isinf(lf) ? 0.0 : std::exp(lf);
}

double log_equidistant_pdf(const BppParams& p, int k, double x) {
    check_params(p);
    if (k < 1 || k > p.n_abs - 1) throw std::domain_error("equidistant_pdf: need 1 <= k <= N-1");
    check_range(p, x, "equidistant_pdf");
    if (x == 0.0) return -std::numeric_limits<double>::infinity();
    const double n = p.n_abs;
    const double u = std::pow(x / p.radius, 3.0);
    // shape x^2k (1 - (x/R)^3)^(N-k); normalization from the substitution
    // u = (x/R)^3, which turns the integral into B((2k+1)/3, N-k+1)
    const double log_norm = std::log(3.0 / p.radius) - log_beta_fn((2.0 * k + 1.0) / 3.0, n - k + 1.0);
    return log_norm + 2.0 * k * std::log(x / p.radius) + (n - k) * std::log1p(-u);
}

double equidistant_pdf(const BppParams& p, int k, double x) {
    if (x == 0.0) {
        check_params(p);
        if (k < 1 || k > p.n_abs - 1) throw std::domain_error("equidistant_pdf: need 1 <= k <= N-1");
        return 0.0;
    }
    const double lf = log_equidistant_pdf(p, k, x);
    return std::isinf(lf) ? 0.0 : std::exp(lf);
}

std::vector<double> sample_ordered_nearest(const BppParams& p, int k, Rng& rng) {
    check_params(p);
    if (k < 1 || k > p.n_abs) throw std::invalid_argument("sample_ordered_nearest: need 1 <= k <= N");
    std::vector<double> radii(static_cast<std::size_t>(p.n_abs));
    for (auto& r : radii) r = p.radius * std::cbrt(rng.uniform());
    if (k < p.n_abs)
        std::nth_element(radii.begin(), radii.begin() + (k - 1), radii.end());
    radii.resize(static_cast<std::size_t>(k));
    std::sort(radii.begin(), radii.end());
    return radii;
}

std::vector<double> sample_ordered_nearest(const BppParams& p, int k, std::uint64_t seed) {
    Rng rng(seed);
    return sample_ordered_nearest(p, k, rng);
}

OrderedDistances sample_ordered_nearest4(const BppParams& p, Rng& rng) {
    const auto r = sample_ordered_nearest(p, 4, rng);
    return {r[0], r[1], r[2], r[3]};
}

}  // namespace aircomp
