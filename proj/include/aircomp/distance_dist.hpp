#pragma once

#include <cstdint>
#include <vector>

#include "aircomp/rng.hpp"

namespace aircomp {

struct BppParams {
    int n_abs = 0;       // N
    double radius = 0.0; // R, meters
};

// 0 < r1 < r2 < r3 < r4 <= R
struct OrderedDistances {
    double r1 = 0.0, r2 = 0.0, r3 = 0.0, r4 = 0.0;
};

// Nearest-distance law of a single uniform point in the ball: CDF (r/R)^3.
double nearest_cdf(const BppParams& p, double r);
double nearest_pdf(const BppParams& p, double r);

// Conditional law of one interferer distance given the serving distance:
// 3 r^2 / (R^3 - s^3) on [s, R].
double interferer_pdf_conditional(const BppParams& p, double serving_r, double r);

// Joint density of the four nearest distances,
// N!/(N-4)! (1 - (r4/R)^3)^(N-4) prod 3 ri^2 / R^3.
double joint_pdf_4nearest(const BppParams& p, const OrderedDistances& r);
double log_joint_pdf_4nearest(const BppParams& p, const OrderedDistances& r);

// Density of the fourth-nearest distance.
double fourth_nearest_pdf(const BppParams& p, double r4);
double log_fourth_nearest_pdf(const BppParams& p, double r4);

// Density of the distance from a point equidistant to its k nearest
// transmitters (k = 4 is the worst-case aUE law).
double equidistant_pdf(const BppParams& p, int k, double x);
double log_equidistant_pdf(const BppParams& p, int k, double x);

// Exact sampler: N radii by inverse transform R u^(1/3), k smallest sorted.
std::vector<double> sample_ordered_nearest(const BppParams& p, int k, std::uint64_t seed);
std::vector<double> sample_ordered_nearest(const BppParams& p, int k, Rng& rng);
OrderedDistances sample_ordered_nearest4(const BppParams& p, Rng& rng);

}  // namespace aircomp
