#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "aircomp/analytics.hpp"
#include "aircomp/special.hpp"
#include "aircomp/stats.hpp"
#include "oracles.hpp"

using namespace aircomp;

namespace {

double interferer_sum_sample(Rng& rng, int n_interferers, double d, double R, double alpha) {
    const double d3 = d * d * d, R3 = R * R * R;
    double acc = 0.0;
    for (int k = 0; k < n_interferers; ++k) {
        const double r = std::cbrt(d3 + rng.uniform() * (R3 - d3));  // inverse transform of 3r^2/(R^3-d^3)
        acc += std::pow(r, -alpha);
    }
    return acc;
}

}  // namespace

TEST_CASE("signal MGF") {
    const ChannelConfig cfg{2.0, 150, 3000.0};
    const OrderedDistances r{100.0, 200.0, 300.0, 400.0};
    CHECK(mgf_signal_general(cfg, r, 0.0) == 1.0);

    // all servers at distance d with alpha = 2 gives exp(-16 z / d^2)
    const OrderedDistances eq{500.0, 500.0, 500.0, 500.0};
    for (double z : {1e3, 1e4, 1e5})
        CHECK(mgf_signal_general(cfg, eq, z) ==
              doctest::Approx(std::exp(-16.0 * z / (500.0 * 500.0))).epsilon(1e-12));

    double prev = 1.1;
    for (double z : {0.0, 1e2, 1e4, 1e6, 1e8}) {
        const double m = mgf_signal_general(cfg, r, z);
        CHECK(m <= prev);
        CHECK(m <= 1.0);
        prev = m;
    }
}

TEST_CASE("interference MGF closed form vs defining integral") {
    // acceptance-grade check: relative 1e-7 over a 3x3x3 grid
    const double R = 3000.0;
    for (double alpha : {2.0, 2.8, 3.2}) {
        for (double d4 : {300.0, 800.0, 1500.0}) {
            for (double zs : {0.1, 3.0, 60.0}) {
                const ChannelConfig cfg{alpha, 150, R};
                // scale z so the exponent z d4^-alpha is O(zs)
                const double z = zs * std::pow(d4, alpha);
                const double d3 = d4 * d4 * d4, R3 = R * R * R;
                const double one = oracle::integrate(
                    [&](double x) {
                        return 3.0 * x * x / (R3 - d3) * std::exp(-z * std::pow(x, -alpha));
                    },
                    d4, R, 1e-12);
                const double direct = std::pow(one, 146.0);
                const double closed = mgf_interference_general(cfg, d4, z);
                CHECK(closed == doctest::Approx(direct).epsilon(1e-7));
            }
        }
    }
}

TEST_CASE("interference MGF edges") {
    const ChannelConfig cfg{2.8, 150, 3000.0};
    CHECK(mgf_interference_general(cfg, 500.0, 0.0) == doctest::Approx(1.0).epsilon(1e-9));
    const ChannelConfig none{2.8, 4, 3000.0};
    for (double z : {0.0, 1.0, 1e6}) CHECK(mgf_interference_general(none, 500.0, z) == 1.0);
    CHECK_THROWS_AS(mgf_interference_general(cfg, 3000.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(mgf_interference_general(cfg, -1.0, 1.0), std::domain_error);

    // thinning raises the per-interferer factor to a smaller power: M' >= M
    for (double z : {1e4, 1e6, 1e8}) {
        const double m1 = mgf_interference_general(cfg, 500.0, z);
        const double m4 = mgf_interference_thinned(cfg, 500.0, z, 4.0);
        CHECK(m4 >= m1);
        CHECK(m4 <= 1.0);
    }
}

TEST_CASE("interference moments vs conditional sampling oracle") {
    const ChannelConfig cfg{2.8, 150, 3000.0};
    const auto [mean, var] = interference_moments(cfg, 500.0);

    Rng rng(1001);
    const int trials = 1000000;
    std::vector<double> sums(trials);
    for (auto& s : sums) s = interferer_sum_sample(rng, 146, 500.0, 3000.0, 2.8);
    const auto stats = summarize(sums);
    CHECK(std::fabs(stats.mean - mean) < 3.0 * stats.mean_stderr);
    CHECK(std::fabs(stats.variance - var) < 3.0 * stats.variance_stderr);
}

TEST_CASE("interference moments: continuity at alpha = 3 and edge cases") {
    const double d = 700.0, R = 3000.0;
    const auto at3 = interference_moments({3.0, 150, R}, d);
    for (double da : {1e-4, -1e-4}) {
        const auto near3 = interference_moments({3.0 + da, 150, R}, d);
        CHECK(near3.first == doctest::Approx(at3.first).epsilon(1e-3 * std::fabs(da) / 1e-4));
        CHECK(near3.first == doctest::Approx(at3.first).epsilon(1e-3));
        CHECK(near3.second == doctest::Approx(at3.second).epsilon(1e-3));
    }
    // much tighter when approaching the branch point
    const auto closer = interference_moments({3.0 + 1e-9, 150, R}, d);
    CHECK(closer.first == doctest::Approx(at3.first).epsilon(1e-6));
    CHECK(closer.second == doctest::Approx(at3.second).epsilon(1e-6));

    const auto empty = interference_moments({2.8, 4, R}, d);
    CHECK(empty.first == 0.0);
    CHECK(empty.second == 0.0);

    CHECK_THROWS_AS(interference_moments({2.8, 150, R}, 0.0), std::domain_error);
    CHECK_THROWS_AS(interference_moments({2.8, 150, R}, R), std::domain_error);
}

TEST_CASE("gamma approximation parameters") {
    const ChannelConfig cfg{2.8, 150, 3000.0};
    const auto [mean, var] = interference_moments(cfg, 500.0);
    const auto g = gamma_approx_params(cfg, 500.0);
    CHECK(g.shape * g.scale == doctest::Approx(mean).epsilon(1e-12));
    CHECK(g.shape * g.scale * g.scale == doctest::Approx(var).epsilon(1e-12));

    // Fig. 4 setting: Gamma(v, theta) vs the empirical interference law
    Rng rng(555);
    const int n = 100000;
    std::vector<double> sums(n);
    for (auto& s : sums) s = interferer_sum_sample(rng, 146, 500.0, 3000.0, 2.8);
    const double ks = ks_statistic(
        sums, [&](double x) { return reg_lower_incomplete_gamma(g.shape, x / g.scale); });
    CHECK(ks < 0.05);
}

TEST_CASE("conditional rate integral reduces to Hamdi identity for fixed interference") {
    // with M_I(z) = exp(-z I) the integral is exactly ln(1 + S/I)
    for (double S : {1e-6, 2.5e-5}) {
        for (double I : {1e-7, 4e-6}) {
            const double got =
                detail::conditional_rate_integral(S, [&](double z) { return std::exp(-z * I); });
            CHECK(got == doctest::Approx(std::log1p(S / I)).epsilon(1e-6));
        }
    }
}

TEST_CASE("conditional rate integral agrees with a direct quadrature oracle") {
    const ChannelConfig cfg{2.4, 50, 3000.0};
    const OrderedDistances r{180.0, 420.0, 560.0, 740.0};
    const double S = std::pow(std::pow(r.r1, -1.2) + std::pow(r.r2, -1.2) + std::pow(r.r3, -1.2) +
                                  std::pow(r.r4, -1.2),
                              2.0);
    auto mgf = [&](double z) { return mgf_interference_general(cfg, r.r4, z); };
    const double got = detail::conditional_rate_integral(S, mgf);
    // oracle: integrate over u = ln z on a generous fixed window
    const double z0 = std::log(2.0) / S;
    const double direct = oracle::integrate(
        [&](double u) {
            const double z = z0 * std::exp(u);
            return -std::expm1(-z * S) * mgf(z);
        },
        -45.0, 45.0, 1e-10);
    CHECK(got == doctest::Approx(direct).epsilon(1e-5));
}

TEST_CASE("general rate: ordering in alpha and N") {
    // common sample seeds across the alpha sweep
    const int m = 2000;
    double prev50 = 0.0, prev150 = 0.0;
    for (double alpha : {2.0, 2.6, 3.2}) {
        const auto r50 = rate_general({alpha, 50, 3000.0}, m, 11);
        const auto r150 = rate_general({alpha, 150, 3000.0}, m, 11);
        CHECK(r50.value > prev50);
        CHECK(r150.value > prev150);
        CHECK(r50.value > r150.value);
        CHECK(r50.error < 0.05 * r50.value);
        prev50 = r50.value;
        prev150 = r150.value;
    }
    CHECK_THROWS_AS(rate_general({2.0, 50, 3000.0}, 500, 1), std::invalid_argument);
}

TEST_CASE("coverage limits and monotonicity") {
    const ChannelConfig cfg{2.8, 150, 3000.0};
    const GeneralCoverageCurve curve(cfg, 2000, 17);
    CHECK(curve(1e-6) > 1.0 - 1e-3);
    CHECK(curve(1e6) < 1e-3);
    double prev = 1.1;
    for (double gdb = -20.0; gdb <= 30.0; gdb += 5.0) {
        const double c = curve(db_to_linear(gdb));
        CHECK(c <= prev);
        CHECK(c >= 0.0);
        CHECK(c <= 1.0);
        prev = c;
    }
    CHECK_THROWS_AS(curve(0.0), std::invalid_argument);
}

TEST_CASE("coverage increases with alpha at fixed threshold") {
    const int m = 2000;
    const GeneralCoverageCurve low({2.0, 150, 3000.0}, m, 23);
    const GeneralCoverageCurve high({2.8, 150, 3000.0}, m, 23);
    // at very low thresholds both curves saturate to 1.0 in double
    // precision, so the strict ordering is asserted on interior points
    for (double gdb : {0.0, 10.0, 20.0})
        CHECK(high(db_to_linear(gdb)) > low(db_to_linear(gdb)));
    for (double gdb : {-20.0, -10.0})
        CHECK(high(db_to_linear(gdb)) >= low(db_to_linear(gdb)));
}

TEST_CASE("rate_from_coverage closed forms") {
    CHECK(rate_from_coverage([](double g) { return 1.0 / (1.0 + g); }) ==
          doctest::Approx(1.0).epsilon(1e-7));
    const double g0 = 42.0;
    CHECK(rate_from_coverage([&](double g) { return g < g0 ? 1.0 : 0.0; }) ==
          doctest::Approx(std::log1p(g0)).epsilon(1e-6));
}

TEST_CASE("rate bridge: coverage-integrated rate near the direct rate") {
    const ChannelConfig cfg{2.0, 50, 3000.0};
    const int m = 3000;
    const auto direct = rate_general(cfg, m, 99);
    const GeneralCoverageCurve curve(cfg, m, 99);
    const double bridged = rate_from_coverage([&](double g) { return curve(g); });
    CHECK(bridged == doctest::Approx(direct.value).epsilon(0.05));
}

TEST_CASE("worst-case rate and coverage") {
    const ChannelConfig cfg{2.8, 150, 3000.0};
    const auto r = rate_worst(cfg);
    CHECK(r.value > 0.0);
    CHECK(std::isfinite(r.value));

    double prev = 1.1;
    for (double gdb : {-10.0, 0.0, 10.0, 20.0}) {
        const auto c = coverage_worst(cfg, db_to_linear(gdb));
        CHECK(c.value >= 0.0);
        CHECK(c.value <= 1.0);
        CHECK(c.value <= prev);
        prev = c.value;
    }

    // worst-case thinned rate reduces to the plain worst-case rate at eta = 1
    const auto r1 = rate_worst_thinned(cfg, 1.0);
    CHECK(r1.value == doctest::Approx(r.value).epsilon(1e-12));
}

TEST_CASE("thinned rate reduces to the plain rate at eta = 1") {
    const ChannelConfig cfg{2.0, 50, 3000.0};
    const auto a = rate_general(cfg, 1500, 7);
    const auto b = rate_general_thinned(cfg, 1.0, 1500, 7);
    CHECK(a.value == doctest::Approx(b.value).epsilon(1e-12));

    // higher eta keeps the integrand finite and positive across N
    for (int n : {20, 50, 300}) {
        const auto t = rate_general_thinned({2.0, n, 3000.0}, 6.0, 1500, 7);
        CHECK(t.value > 0.0);
        CHECK(std::isfinite(t.value));
    }
}

TEST_CASE("PPP mean interference: divergence flags and closed form") {
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(mean_total_interference_ppp(1.0, 2.0, 1.0, inf).divergent);
    CHECK(mean_total_interference_ppp(1.0, 3.0, 1.0, inf).divergent);
    CHECK(mean_total_interference_ppp(1.0, 4.0, 0.0, 10.0).divergent);

    const auto a4 = mean_total_interference_ppp(1.0, 4.0, 1.0, inf);
    CHECK(!a4.divergent);
    CHECK(a4.value == doctest::Approx(4.0 * M_PI).epsilon(1e-12));

    // finite annulus vs Monte-Carlo volume integration
    const double lambda = 2.5, alpha = 2.0, r0 = 100.0, r1 = 400.0;
    const auto closed = mean_total_interference_ppp(lambda, alpha, r0, r1);
    Rng rng(4);
    const int m = 400000;
    std::vector<double> vals(m);
    const double vol = 4.0 * M_PI / 3.0 * (r1 * r1 * r1 - r0 * r0 * r0);
    for (auto& v : vals) {
        // uniform radius in the annulus by inverse transform on r^3
        const double r = std::cbrt(r0 * r0 * r0 + rng.uniform() * (r1 * r1 * r1 - r0 * r0 * r0));
        v = lambda * vol * std::pow(r, -alpha);
    }
    const auto s = summarize(vals);
    CHECK(std::fabs(s.mean - closed.value) < 3.0 * s.mean_stderr);
}
