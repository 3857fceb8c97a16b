#include "predicates.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace aircomp::detail {

namespace {

using Rational = boost::multiprecision::cpp_rational;

struct RPoint {
    Rational x, y, z;
};

RPoint to_rational(const Point3& p) { return {Rational(p.x), Rational(p.y), Rational(p.z)}; }

template <class T, class P>
T orient3d_det(const P& a, const P& b, const P& c, const P& d) {
    const T adx = T(a.x) - T(d.x), ady = T(a.y) - T(d.y), adz = T(a.z) - T(d.z);
    const T bdx = T(b.x) - T(d.x), bdy = T(b.y) - T(d.y), bdz = T(b.z) - T(d.z);
    const T cdx = T(c.x) - T(d.x), cdy = T(c.y) - T(d.y), cdz = T(c.z) - T(d.z);
    return adx * (bdy * cdz - bdz * cdy) + ady * (bdz * cdx - bdx * cdz) +
           adz * (bdx * cdy - bdy * cdx);
}

double orient3d_permanent(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
    const double adx = std::fabs(a.x - d.x), ady = std::fabs(a.y - d.y), adz = std::fabs(a.z - d.z);
    const double bdx = std::fabs(b.x - d.x), bdy = std::fabs(b.y - d.y), bdz = std::fabs(b.z - d.z);
    const double cdx = std::fabs(c.x - d.x), cdy = std::fabs(c.y - d.y), cdz = std::fabs(c.z - d.z);
    return adx * (bdy * cdz + bdz * cdy) + ady * (bdz * cdx + bdx * cdz) +
           adz * (bdx * cdy + bdy * cdx);
}

template <class T, class P>
T det3(T a0, T a1, T a2, T b0, T b1, T b2, T c0, T c1, T c2) {
    return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
}

// Lifted 4x4 determinant with rows (p - e, |p - e|^2) for p in {a, b, c, d}.
template <class T, class P>
T insphere_det(const P& a, const P& b, const P& c, const P& d, const P& e) {
    const T aex = T(a.x) - T(e.x), aey = T(a.y) - T(e.y), aez = T(a.z) - T(e.z);
    const T bex = T(b.x) - T(e.x), bey = T(b.y) - T(e.y), bez = T(b.z) - T(e.z);
    const T cex = T(c.x) - T(e.x), cey = T(c.y) - T(e.y), cez = T(c.z) - T(e.z);
    const T dex = T(d.x) - T(e.x), dey = T(d.y) - T(e.y), dez = T(d.z) - T(e.z);
    const T al = aex * aex + aey * aey + aez * aez;
    const T bl = bex * bex + bey * bey + bez * bez;
    const T cl = cex * cex + cey * cey + cez * cez;
    const T dl = dex * dex + dey * dey + dez * dez;
    // Laplace expansion along the lift column.
    return -al * det3<T, P>(bex, bey, bez, cex, cey, cez, dex, dey, dez) +
           bl * det3<T, P>(aex, aey, aez, cex, cey, cez, dex, dey, dez) -
           cl * det3<T, P>(aex, aey, aez, bex, bey, bez, dex, dey, dez) +
           dl * det3<T, P>(aex, aey, aez, bex, bey, bez, cex, cey, cez);
}

double abs_det3(double a0, double a1, double a2, double b0, double b1, double b2, double c0,
                double c1, double c2) {
    a0 = std::fabs(a0); a1 = std::fabs(a1); a2 = std::fabs(a2);
    b0 = std::fabs(b0); b1 = std::fabs(b1); b2 = std::fabs(b2);
    c0 = std::fabs(c0); c1 = std::fabs(c1); c2 = std::fabs(c2);
    return a0 * (b1 * c2 + b2 * c1) + a1 * (b0 * c2 + b2 * c0) + a2 * (b0 * c1 + b1 * c0);
}

double insphere_permanent(const Point3& a, const Point3& b, const Point3& c, const Point3& d,
                          const Point3& e) {
    const double aex = a.x - e.x, aey = a.y - e.y, aez = a.z - e.z;
    const double bex = b.x - e.x, bey = b.y - e.y, bez = b.z - e.z;
    const double cex = c.x - e.x, cey = c.y - e.y, cez = c.z - e.z;
    const double dex = d.x - e.x, dey = d.y - e.y, dez = d.z - e.z;
    const double al = aex * aex + aey * aey + aez * aez;
    const double bl = bex * bex + bey * bey + bez * bez;
    const double cl = cex * cex + cey * cey + cez * cez;
    const double dl = dex * dex + dey * dey + dez * dez;
    return al * abs_det3(bex, bey, bez, cex, cey, cez, dex, dey, dez) +
           bl * abs_det3(aex, aey, aez, cex, cey, cez, dex, dey, dez) +
           cl * abs_det3(aex, aey, aez, bex, bey, bez, dex, dey, dez) +
           dl * abs_det3(aex, aey, aez, bex, bey, bez, cex, cey, cez);
}

int sign_of(const Rational& r) { return r == 0 ? 0 : (r > 0 ? 1 : -1); }

// Deterministic symbolic perturbation over n involved points. eval must
// compute the exact determinant for the (possibly displaced) point set.
// Perturbation priority: descending global index, then x, y, z, first then
// second derivative. Both determinants are at most quadratic per
// coordinate, so +/-1 central differences recover derivatives exactly.
template <class Eval>
int resolve_tie(const Point3* pts, const int* idx, int n, const Eval& eval) {
    std::array<int, 5> order{};
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.begin() + n,
              [&](int u, int v) { return idx[u] > idx[v]; });

    std::array<RPoint, 5> rp{};
    for (int i = 0; i < n; ++i) rp[static_cast<std::size_t>(i)] = to_rational(pts[i]);

    for (int oi = 0; oi < n; ++oi) {
        const int pi = order[static_cast<std::size_t>(oi)];
        for (int coord = 0; coord < 3; ++coord) {
            Rational& c = coord == 0 ? rp[static_cast<std::size_t>(pi)].x
                        : coord == 1 ? rp[static_cast<std::size_t>(pi)].y
                                     : rp[static_cast<std::size_t>(pi)].z;
            const Rational saved = c;
            c = saved + 1;
            const Rational plus = eval(rp.data());
            c = saved - 1;
            const Rational minus = eval(rp.data());
            c = saved;
            const Rational first = plus - minus;         // 2 f'
            if (first != 0) return sign_of(first);
            const Rational second = plus + minus;        // 2 f'' (f(0) = 0 here)
            if (second != 0) return sign_of(second);
        }
    }
    throw std::invalid_argument("geometric predicate: fully degenerate configuration (duplicate points?)");
}

}  // namespace

int orient3d_sign(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
    const double det = orient3d_det<double, Point3>(a, b, c, d);
    const double bound = 1e-14 * orient3d_permanent(a, b, c, d);
    if (det > bound) return 1;
    if (det < -bound) return -1;
    const Rational exact =
        orient3d_det<Rational, RPoint>(to_rational(a), to_rational(b), to_rational(c), to_rational(d));
    return sign_of(exact);
}

int orient3d_sign_sos(const Point3 p[4], const int idx[4]) {
    const int s = orient3d_sign(p[0], p[1], p[2], p[3]);
    if (s != 0) return s;
    return resolve_tie(p, idx, 4, [](const RPoint* q) {
        return orient3d_det<Rational, RPoint>(q[0], q[1], q[2], q[3]);
    });
}

int insphere_sign(const Point3& a, const Point3& b, const Point3& c, const Point3& d,
                  const Point3& e) {
    const double det = insphere_det<double, Point3>(a, b, c, d, e);
    const double bound = 1e-13 * insphere_permanent(a, b, c, d, e);
    if (det > bound) return 1;
    if (det < -bound) return -1;
    const Rational exact = insphere_det<Rational, RPoint>(to_rational(a), to_rational(b),
                                                          to_rational(c), to_rational(d),
                                                          to_rational(e));
    return sign_of(exact);
}

int insphere_sign_sos(const Point3 p[5], const int idx[5]) {
    const int s = insphere_sign(p[0], p[1], p[2], p[3], p[4]);
    if (s != 0) return s;
    return resolve_tie(p, idx, 5, [](const RPoint* q) {
        return insphere_det<Rational, RPoint>(q[0], q[1], q[2], q[3], q[4]);
    });
}

}  // namespace aircomp::detail
