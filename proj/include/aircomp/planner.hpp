#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "aircomp/analytics.hpp"
#include "aircomp/geometry.hpp"

namespace aircomp {

// Planning works at path-loss exponent alpha = 2 (free-space propagation).
struct ReuseConfig {
    double rate_threshold = 0.0;  // minimum rate per aUE, nats/s/Hz
    int n_abs = 0;
    double radius_m = 0.0;
};

enum class AueCase { general, worst };

// Mean coherent signal power restricted to serving distances below epsilon;
// closed forms in Gamma ratios, evaluated in log space.
double expected_signal_power(const ReuseConfig& cfg, AueCase aue, double epsilon);

// Mean same-band interference from transmitters outside b(0, epsilon),
// 3 N eps^3 / (R^3 (R^2 + R eps + eps^2)), exactly as printed in the source
// model (see the planning diagnostic for its divergence from simulation).
double expected_interference_outside(const ReuseConfig& cfg, double epsilon);

struct EpsilonStar {
    double value = 0.0;
    bool clamped = false;  // true when the root exceeded R and was clamped
};

// Unique positive root of
//   (e^Rth - 1) e^5 - Delta(N) (R^3 e^2 + R^4 e + R^5) = 0
// by bracketing bisection to relative 1e-10.
EpsilonStar solve_epsilon_star(const ReuseConfig& cfg, AueCase aue);

// residual of the quintic at epsilon, normalized by the leading term
double epsilon_star_residual(const ReuseConfig& cfg, AueCase aue, double epsilon);

// eta = ceil((24/35) N pi^2 (eps/R)^3)
int reuse_factor(const ReuseConfig& cfg, double epsilon_star);

// FCC lattice centers with nearest-neighbor spacing 2 r, one center at the
// origin, covering the ball of the given domain radius.
std::vector<Point3> fcc_sphere_centers(double domain_radius, double sphere_radius);

// pi/(3 sqrt 2), computed from the 4-spheres-per-cubic-cell construction
double fcc_packing_efficiency();

enum class CellClass { standard, residual, independent };

struct SphereCluster {
    Point3 center;
    double radius = 0.0;
    std::vector<int> member_cell_ids;  // standard + residual members
    int ordinal = -1;                  // 0-based rank by descending member count
};

struct CellClassification {
    int cell_id = -1;
    CellClass cell_class = CellClass::independent;
    std::vector<int> sphere_ids;
};

// Classify every tetrahedral cell against the packed spheres and fill the
// clusters' member lists and ordinals. standard = all four vertices inside
// one sphere; residual = intersects at least one sphere without being
// contained; independent = clears every sphere.
std::vector<CellClassification> classify_cells(const Tetrahedralization& tess,
                                               std::vector<SphereCluster>& clusters);

struct FrequencyPlan {
    double epsilon_star = 0.0;
    bool epsilon_clamped = false;
    std::vector<SphereCluster> clusters;
    std::vector<CellClassification> classifications;
    std::vector<int> colors;  // per cell id
    int n_colors = 0;
    int k1 = 0;                    // cell count of Sphere-1
    double bandwidth_share = 0.0;  // per-cell share of the total band, 1/k1
};

// Greedy coloring over spheres sorted by descending cell count; `restarts`
// random within-sphere orders are tried and the plan with the fewest colors
// kept (ties by restart index). Independent cells draw uniformly from
// Sphere-1's palette.
FrequencyPlan greedy_frequency_allocation(const Tetrahedralization& tess,
                                          std::vector<SphereCluster> clusters,
                                          const std::vector<CellClassification>& classifications,
                                          int restarts, std::uint64_t seed);

// Full pipeline: epsilon*, FCC packing, classification, coloring.
FrequencyPlan build_frequency_plan(const Tetrahedralization& tess, const ReuseConfig& cfg,
                                   AueCase aue, int restarts, std::uint64_t seed);

// No two cells sharing a sphere share a color.
bool plan_is_valid(const FrequencyPlan& plan);

// Reuse-aware rates (thinned-BPP interference model).
MetricEstimate thinned_rate(const ChannelConfig& cfg, int eta, int mc_outer_samples,
                            std::uint64_t seed);

struct MhcppParams {
    int psi = 0;        // equivalent same-band interferer count
    int eta_prime = 0;  // equivalent reuse factor
    bool psi_clamped = false;
};

// psi = round((N-4) exp(-(N-4)(eps/R)^3)), eta' = round((N-4)/psi); rounding
// is half-to-even, psi forced >= 1.
MhcppParams mhcpp_params(const ReuseConfig& cfg, double epsilon_star);

MetricEstimate rate_mhcpp(const ChannelConfig& cfg, int eta_prime, int mc_outer_samples,
                          std::uint64_t seed);

// CSV exports: cells as cell_id,v0,v1,v2,v3,class,sphere_ids,color (sphere
// ids ';'-joined), spheres as sphere_id,cx,cy,cz,radius,n_cells.
void plan_cells_to_csv(const FrequencyPlan& plan, const Tetrahedralization& tess, std::ostream& os);
void plan_spheres_to_csv(const FrequencyPlan& plan, std::ostream& os);
std::string plan_cells_to_csv(const FrequencyPlan& plan, const Tetrahedralization& tess);
std::string plan_spheres_to_csv(const FrequencyPlan& plan);

namespace detail {
double point_triangle_distance(const Point3& p, const Point3& a, const Point3& b, const Point3& c);
double point_tetrahedron_distance(const Point3& p, const Point3& a, const Point3& b,
                                  const Point3& c, const Point3& d);
}  // namespace detail

}  // namespace aircomp
