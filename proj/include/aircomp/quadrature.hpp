#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace aircomp {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;   // error estimate (absolute)
    long evals = 0;
};

namespace detail {

// 15-point Gauss-Legendre nodes/weights on [-1,1], computed once by Newton
// iteration on the Legendre recurrence (machine accurate, no tables).
struct GaussLegendre15 {
    double node[15];
    double weight[15];
    GaussLegendre15() {
        constexpr int n = 15;
        for (int i = 0; i < n; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = n * (x * p1 - p0) / (x * x - 1.0);
                double dx = p1 / dp;
                x -= dx;
                if (std::fabs(dx) < 1e-16) break;
            }
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            node[i] = x;
            weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

inline const GaussLegendre15& gl15() {
    static const GaussLegendre15 table;
    return table;
}

template <class F>
double gl15_panel(F&& f, double a, double b, long& evals) {
    const auto& q = gl15();
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < 15; ++i) sum += q.weight[i] * f(c + h * q.node[i]);
    evals += 15;
    return sum * h;
}

template <class F>
void adapt(F&& f, double a, double b, double whole, double tol, int depth, QuadResult& out) {
    const double m = 0.5 * (a + b);
    const double left = gl15_panel(f, a, m, out.evals);
    const double right = gl15_panel(f, m, b, out.evals);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= tol || depth <= 0) {
        // depth exhaustion accumulates into the error estimate; callers that
        // need a guarantee compare .error against their tolerance
        out.value += left + right;
        out.error += std::fabs(delta);
        return;
    }
    adapt(f, a, m, left, 0.5 * tol, depth - 1, out);
    adapt(f, m, b, right, 0.5 * tol, depth - 1, out);
}

}  // namespace detail

// Adaptive Gauss-Legendre integration of f over [a, b]. The tolerance is
// abs_tol + rel_tol * |coarse estimate|, refined by interval bisection.
template <class F>
QuadResult integrate(F&& f, double a, double b, double rel_tol = 1e-10, double abs_tol = 0.0,
                     int max_depth = 48) {
    QuadResult out;
    if (a == b) return out;
    const double whole = detail::gl15_panel(f, a, b, out.evals);
    const double tol = abs_tol + rel_tol * std::fabs(whole);
    detail::adapt(f, a, b, whole, tol > 0 ? tol : 1e-300, max_depth, out);
    return out;
}

// Integrate f over [a, inf) via the map x = a + t/(1-t).
template <class F>
QuadResult integrate_to_inf(F&& f, double a, double rel_tol = 1e-10, double abs_tol = 0.0) {
    auto g = [&](double t) {
        const double onemt = 1.0 - t;
        const double x = a + t / onemt;
        return f(x) / (onemt * onemt);
    };
    return integrate(g, 0.0, 1.0, rel_tol, abs_tol);
}

}  // namespace aircomp
