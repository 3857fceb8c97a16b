#include "aircomp/planner.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "aircomp/rng.hpp"
#include "aircomp/special.hpp"

namespace aircomp {

namespace {

void check_cfg(const ReuseConfig& cfg) {
    if (!(cfg.rate_threshold > 0.0))
        throw std::invalid_argument("ReuseConfig: rate threshold must be > 0");
    if (cfg.n_abs < 5) throw std::invalid_argument("ReuseConfig: N must be >= 5");
    if (!(cfg.radius_m > 0.0)) throw std::invalid_argument("ReuseConfig: R must be > 0");
}

// E[X] eps^2, i.e. the signal-power constants of the two aUE cases
double signal_power_constant(int n, AueCase aue) {
    if (aue == AueCase::general) {
        // 65 Gamma(N+1) Gamma(10/3) / (12 Gamma(N+1/3))
        return 65.0 / 12.0 *
               std::exp(log_gamma_fn(n + 1.0) + log_gamma_fn(10.0 / 3.0) -
                        log_gamma_fn(n + 1.0 / 3.0));
    }
    // 8 Gamma(7/3) Gamma(N) / Gamma(N-2/3)
    return 8.0 * std::exp(log_gamma_fn(7.0 / 3.0) + log_gamma_fn(static_cast<double>(n)) -
                          log_gamma_fn(n - 2.0 / 3.0));
}

}  // namespace

double expected_signal_power(const ReuseConfig& cfg, AueCase aue, double epsilon) {
    check_cfg(cfg);
    if (!(epsilon > 0.0)) throw std::invalid_argument("expected_signal_power: epsilon > 0");
    return signal_power_constant(cfg.n_abs, aue) / (epsilon * epsilon);
}

double expected_interference_outside(const ReuseConfig& cfg, double epsilon) {
    check_cfg(cfg);
    if (!(epsilon > 0.0) || epsilon > cfg.radius_m)
        throw std::domain_error("expected_interference_outside: epsilon must be in (0, R]");
    const double R = cfg.radius_m;
    return 3.0 * cfg.n_abs * epsilon * epsilon * epsilon /
           (R * R * R * (R * R + R * epsilon + epsilon * epsilon));
}

namespace {

double quintic(const ReuseConfig& cfg, AueCase aue, double eps) {
    const double R = cfg.radius_m;
    const double delta = signal_power_constant(cfg.n_abs, aue) / (3.0 * cfg.n_abs);
    const double R3 = R * R * R;
    return std::expm1(cfg.rate_threshold) * std::pow(eps, 5.0) -
           delta * R3 * (eps * eps + eps * R + R * R);
}

}  // namespace

double epsilon_star_residual(const ReuseConfig& cfg, AueCase aue, double epsilon) {
    return quintic(cfg, aue, epsilon) /
           (std::expm1(cfg.rate_threshold) * std::pow(epsilon, 5.0));
}

EpsilonStar solve_epsilon_star(const ReuseConfig& cfg, AueCase aue) {
    check_cfg(cfg);
    double lo = 1e-9 * cfg.radius_m;
    double hi = 10.0 * cfg.radius_m;
    if (!(quintic(cfg, aue, lo) < 0.0) || !(quintic(cfg, aue, hi) > 0.0))
        throw std::runtime_error("solve_epsilon_star: no sign change in (0, 10R]");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (quintic(cfg, aue, mid) < 0.0)
            lo = mid;
        else
            hi = mid;
        if ((hi - lo) < 1e-10 * hi) break;
    }
    const double root = 0.5 * (lo + hi);
    if (root > cfg.radius_m) return {cfg.radius_m, true};
    return {root, false};
}

int reuse_factor(const ReuseConfig& cfg, double epsilon_star) {
    check_cfg(cfg);
    if (!(epsilon_star > 0.0)) throw std::invalid_argument("reuse_factor: epsilon* > 0");
    const double ratio = epsilon_star / cfg.radius_m;
    return static_cast<int>(
        std::ceil(24.0 / 35.0 * cfg.n_abs * M_PI * M_PI * ratio * ratio * ratio));
}

std::vector<Point3> fcc_sphere_centers(double domain_radius, double sphere_radius) {
    if (!(sphere_radius > 0.0)) throw std::invalid_argument("fcc_sphere_centers: radius > 0");
    if (!(domain_radius >= 0.0)) throw std::invalid_argument("fcc_sphere_centers: domain >= 0");
    const double a = 2.0 * std::sqrt(2.0) * sphere_radius;  // cubic lattice constant
    const double reach = domain_radius + sphere_radius;
    const int m = static_cast<int>(std::ceil(reach / a)) + 1;
    const Point3 basis[4] = {{0.0, 0.0, 0.0},
                             {0.0, 0.5 * a, 0.5 * a},
                             {0.5 * a, 0.0, 0.5 * a},
                             {0.5 * a, 0.5 * a, 0.0}};
    std::vector<Point3> centers;
    for (int i = -m; i <= m; ++i)
        for (int j = -m; j <= m; ++j)
            for (int k = -m; k <= m; ++k)
                for (const auto& b : basis) {
                    const Point3 c{i * a + b.x, j * a + b.y, k * a + b.z};
                    if (c.norm() <= reach) centers.push_back(c);
                }
    // deterministic order: by distance from the origin, then lexicographic
    std::sort(centers.begin(), centers.end(), [](const Point3& p, const Point3& q) {
        const double np = p.norm2(), nq = q.norm2();
        if (np != nq) return np < nq;
        if (p.x != q.x) return p.x < q.x;
        if (p.y != q.y) return p.y < q.y;
        return p.z < q.z;
    });
    return centers;
}

double fcc_packing_efficiency() {
    const double r = 1.0;
    const double a = 2.0 * std::sqrt(2.0) * r;
    // 8 corner eighths + 6 face halves = 4 spheres per cubic cell
    return 4.0 * (4.0 / 3.0) * M_PI * r * r * r / (a * a * a);
}

namespace detail {

double point_triangle_distance(const Point3& p, const Point3& a, const Point3& b, const Point3& c) {
    const Point3 ab = b - a, ac = c - a, ap = p - a;
    const double d1 = ab.dot(ap), d2 = ac.dot(ap);
    if (d1 <= 0.0 && d2 <= 0.0) return (p - a).norm();
    const Point3 bp = p - b;
    const double d3 = ab.dot(bp), d4 = ac.dot(bp);
    if (d3 >= 0.0 && d4 <= d3) return (p - b).norm();
    const double vc = d1 * d4 - d3 * d2;
    if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
        const double v = d1 / (d1 - d3);
        return (p - (a + ab * v)).norm();
    }
    const Point3 cp = p - c;
    const double d5 = ab.dot(cp), d6 = ac.dot(cp);
    if (d6 >= 0.0 && d5 <= d6) return (p - c).norm();
    const double vb = d5 * d2 - d1 * d6;
    if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
        const double w = d2 / (d2 - d6);
        return (p - (a + ac * w)).norm();
    }
    const double va = d3 * d6 - d5 * d4;
    if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
        const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
        return (p - (b + (c - b) * w)).norm();
    }
    const double denom = 1.0 / (va + vb + vc);
    const double v = vb * denom, w = vc * denom;
    return (p - (a + ab * v + ac * w)).norm();
}

double point_tetrahedron_distance(const Point3& p, const Point3& a, const Point3& b,
                                  const Point3& c, const Point3& d) {
    // inside test: p on the same side of each face as the opposite vertex
    const Point3 v[4] = {a, b, c, d};
    bool inside = true;
    for (int i = 0; i < 4 && inside; ++i) {
        Point3 f[3];
        int k = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i) f[k++] = v[j];
        const Point3 n = (f[1] - f[0]).cross(f[2] - f[0]);
        const double sp = n.dot(p - f[0]);
        const double sv = n.dot(v[i] - f[0]);
        if (sp * sv < 0.0) inside = false;
    }
    if (inside) return 0.0;
    double best = point_triangle_distance(p, a, b, c);
    best = std::min(best, point_triangle_distance(p, a, b, d));
    best = std::min(best, point_triangle_distance(p, a, c, d));
    best = std::min(best, point_triangle_distance(p, b, c, d));
    return best;
}

}  // namespace detail

std::vector<CellClassification> classify_cells(const Tetrahedralization& tess,
                                               std::vector<SphereCluster>& clusters) {
    std::vector<CellClassification> out(static_cast<std::size_t>(tess.size()));
    for (auto& cl : clusters) cl.member_cell_ids.clear();

    for (int cell = 0; cell < tess.size(); ++cell) {
        const auto& ids = tess.tetrahedra[static_cast<std::size_t>(cell)].vertex_ids;
        const Point3 v0 = tess.vertex(ids[0]), v1 = tess.vertex(ids[1]), v2 = tess.vertex(ids[2]),
                     v3 = tess.vertex(ids[3]);
        auto& cls = out[static_cast<std::size_t>(cell)];
        cls.cell_id = cell;

        int containing = -1;
        std::vector<int> touching;
        for (int s = 0; s < static_cast<int>(clusters.size()); ++s) {
            const auto& sp = clusters[static_cast<std::size_t>(s)];
            bool all_in = true;
            for (const Point3* v : {&v0, &v1, &v2, &v3})
                if ((*v - sp.center).norm() > sp.radius) {
                    all_in = false;
                    break;
                }
            if (all_in) {
                containing = s;
                break;  // non-overlapping spheres: at most one can contain the cell
            }
            if (detail::point_tetrahedron_distance(sp.center, v0, v1, v2, v3) <= sp.radius)
                touching.push_back(s);
        }
        if (containing >= 0) {
            cls.cell_class = CellClass::standard;
            cls.sphere_ids = {containing};
            clusters[static_cast<std::size_t>(containing)].member_cell_ids.push_back(cell);
        } else if (!touching.empty()) {
            cls.cell_class = CellClass::residual;
            cls.sphere_ids = touching;
            for (int s : touching)
                clusters[static_cast<std::size_t>(s)].member_cell_ids.push_back(cell);
        } else {
            cls.cell_class = CellClass::independent;
        }
    }

    // ordinal = rank by descending member count (ties by sphere index)
    std::vector<int> order(clusters.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto sa = clusters[static_cast<std::size_t>(a)].member_cell_ids.size();
        const auto sb = clusters[static_cast<std::size_t>(b)].member_cell_ids.size();
        return sa != sb ? sa > sb : a < b;
    });
    for (int rank = 0; rank < static_cast<int>(order.size()); ++rank)
        clusters[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])].ordinal = rank;
    return out;
}

namespace {

struct ColoringResult {
    std::vector<int> colors;
    int n_colors = 0;
};

ColoringResult color_once(const std::vector<SphereCluster>& clusters,
                          const std::vector<CellClassification>& classifications, Rng& rng) {
    const int n_cells = static_cast<int>(classifications.size());
    std::vector<int> colors(static_cast<std::size_t>(n_cells), -1);

    std::vector<int> sphere_order(clusters.size());
    std::iota(sphere_order.begin(), sphere_order.end(), 0);
    std::sort(sphere_order.begin(), sphere_order.end(), [&](int a, int b) {
        return clusters[static_cast<std::size_t>(a)].ordinal < clusters[static_cast<std::size_t>(b)].ordinal;
    });

    int max_color = -1;
    for (int s : sphere_order) {
        const auto& members = clusters[static_cast<std::size_t>(s)].member_cell_ids;
        std::vector<int> todo;
        for (int cell : members)
            if (colors[static_cast<std::size_t>(cell)] < 0) todo.push_back(cell);
        // random within-sphere sequence (Fisher-Yates with the restart stream)
        for (std::size_t i = todo.size(); i > 1; --i)
            std::swap(todo[i - 1], todo[rng.uniform_int(i)]);
        for (int cell : todo) {
            // colors blocked by any cell sharing any of this cell's spheres
            std::vector<char> used;
            for (int sp : classifications[static_cast<std::size_t>(cell)].sphere_ids)
                for (int other : clusters[static_cast<std::size_t>(sp)].member_cell_ids) {
                    const int c = colors[static_cast<std::size_t>(other)];
                    if (c >= 0) {
                        if (c >= static_cast<int>(used.size()))
                            used.resize(static_cast<std::size_t>(c) + 1, 0);
                        used[static_cast<std::size_t>(c)] = 1;
                    }
                }
            int c = 0;
            while (c < static_cast<int>(used.size()) && used[static_cast<std::size_t>(c)]) ++c;
            colors[static_cast<std::size_t>(cell)] = c;
            max_color = std::max(max_color, c);
        }
    }
    return {std::move(colors), max_color + 1};
}

}  // namespace

FrequencyPlan greedy_frequency_allocation(const Tetrahedralization& tess,
                                          std::vector<SphereCluster> clusters,
                                          const std::vector<CellClassification>& classifications,
                                          int restarts, std::uint64_t seed) {
    if (restarts < 1) throw std::invalid_argument("greedy_frequency_allocation: restarts >= 1");
    if (static_cast<int>(classifications.size()) != tess.size())
        throw std::invalid_argument("greedy_frequency_allocation: classification size mismatch");

    ColoringResult best;
    for (int r = 0; r < restarts; ++r) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(r));
        ColoringResult cand = color_once(clusters, classifications, rng);
        if (best.colors.empty() || cand.n_colors < best.n_colors) best = std::move(cand);
    }

    FrequencyPlan plan;
    plan.clusters = std::move(clusters);
    plan.classifications = classifications;
    plan.colors = std::move(best.colors);
    plan.n_colors = best.n_colors;

    // Sphere-1 and its palette
    const SphereCluster* sphere1 = nullptr;
    for (const auto& cl : plan.clusters)
        if (cl.ordinal == 0) sphere1 = &cl;
    std::vector<int> palette;
    if (sphere1 != nullptr) {
        plan.k1 = static_cast<int>(sphere1->member_cell_ids.size());
        for (int cell : sphere1->member_cell_ids) palette.push_back(plan.colors[static_cast<std::size_t>(cell)]);
        std::sort(palette.begin(), palette.end());
    }
    if (palette.empty()) palette.push_back(0);
    plan.bandwidth_share = plan.k1 > 0 ? 1.0 / plan.k1 : 1.0;

    // independent cells draw uniformly from Sphere-1's palette
    Rng rng = Rng::substream(seed, 0x9E3779B97F4A7C15ULL);
    for (const auto& cls : plan.classifications)
        if (cls.cell_class == CellClass::independent)
            plan.colors[static_cast<std::size_t>(cls.cell_id)] =
                palette[rng.uniform_int(palette.size())];

    if (plan.n_colors == 0 && tess.size() > 0) plan.n_colors = 1;
    return plan;
}

FrequencyPlan build_frequency_plan(const Tetrahedralization& tess, const ReuseConfig& cfg,
                                   AueCase aue, int restarts, std::uint64_t seed) {
    check_cfg(cfg);
    const EpsilonStar eps = solve_epsilon_star(cfg, aue);
    auto centers = fcc_sphere_centers(cfg.radius_m, eps.value);
    std::vector<SphereCluster> clusters(centers.size());
    for (std::size_t i = 0; i < centers.size(); ++i) {
        clusters[i].center = centers[i];
        clusters[i].radius = eps.value;
    }
    const auto classifications = classify_cells(tess, clusters);
    FrequencyPlan plan = greedy_frequency_allocation(tess, std::move(clusters), classifications,
                                                     restarts, seed);
    plan.epsilon_star = eps.value;
    plan.epsilon_clamped = eps.clamped;
    return plan;
}

bool plan_is_valid(const FrequencyPlan& plan) {
    for (const auto& cl : plan.clusters) {
        std::vector<int> seen;
        for (int cell : cl.member_cell_ids) {
            const int c = plan.colors[static_cast<std::size_t>(cell)];
            if (c < 0) return false;
            if (std::find(seen.begin(), seen.end(), c) != seen.end()) return false;
            seen.push_back(c);
        }
    }
    return true;
}

MetricEstimate thinned_rate(const ChannelConfig& cfg, int eta, int mc_outer_samples,
                            std::uint64_t seed) {
    if (eta < 1) throw std::invalid_argument("thinned_rate: eta >= 1");
    return rate_general_thinned(cfg, static_cast<double>(eta), mc_outer_samples, seed);
}

MhcppParams mhcpp_params(const ReuseConfig& cfg, double epsilon_star) {
    check_cfg(cfg);
    if (!(epsilon_star > 0.0)) throw std::invalid_argument("mhcpp_params: epsilon* > 0");
    const double n_i = cfg.n_abs - 4.0;
    const double ratio = epsilon_star / cfg.radius_m;
    const double raw = n_i * std::exp(-n_i * ratio * ratio * ratio);
    MhcppParams out;
    long psi = std::lrint(raw);  // round half to even (default FP mode)
    if (psi < 1) {
        psi = 1;
        out.psi_clamped = true;
    }
    out.psi = static_cast<int>(psi);
    long eta = std::lrint(n_i / static_cast<double>(psi));
    out.eta_prime = static_cast<int>(std::max(1L, eta));
    return out;
}

MetricEstimate rate_mhcpp(const ChannelConfig& cfg, int eta_prime, int mc_outer_samples,
                          std::uint64_t seed) {
    if (eta_prime < 1) throw std::invalid_argument("rate_mhcpp: eta' >= 1");
    return rate_general_thinned(cfg, static_cast<double>(eta_prime), mc_outer_samples, seed);
}

namespace {

const char* class_name(CellClass c) {
    switch (c) {
        case CellClass::standard: return "standard";
        case CellClass::residual: return "residual";
        default: return "independent";
    }
}

}  // namespace

void plan_cells_to_csv(const FrequencyPlan& plan, const Tetrahedralization& tess,
                       std::ostream& os) {
    os << "cell_id,v0,v1,v2,v3,class,sphere_ids,color\n";
    for (int cell = 0; cell < tess.size(); ++cell) {
        const auto& ids = tess.tetrahedra[static_cast<std::size_t>(cell)].vertex_ids;
        const auto& cls = plan.classifications[static_cast<std::size_t>(cell)];
        os << cell << ',' << ids[0] << ',' << ids[1] << ',' << ids[2] << ',' << ids[3] << ','
           << class_name(cls.cell_class) << ',';
        for (std::size_t i = 0; i < cls.sphere_ids.size(); ++i)
            os << (i ? ";" : "") << cls.sphere_ids[i];
        os << ',' << plan.colors[static_cast<std::size_t>(cell)] << '\n';
    }
}

void plan_spheres_to_csv(const FrequencyPlan& plan, std::ostream& os) {
    os << "sphere_id,cx,cy,cz,radius,n_cells\n";
    os << std::setprecision(17);
    for (std::size_t s = 0; s < plan.clusters.size(); ++s) {
        const auto& cl = plan.clusters[s];
        os << s << ',' << cl.center.x << ',' << cl.center.y << ',' << cl.center.z << ','
           << cl.radius << ',' << cl.member_cell_ids.size() << '\n';
    }
}

std::string plan_cells_to_csv(const FrequencyPlan& plan, const Tetrahedralization& tess) {
    std::ostringstream os;
    plan_cells_to_csv(plan, tess, os);
    return os.str();
}

std::string plan_spheres_to_csv(const FrequencyPlan& plan) {
    std::ostringstream os;
    plan_spheres_to_csv(plan, os);
    return os.str();
}

}  // namespace aircomp
