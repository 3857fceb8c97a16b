#include "aircomp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "aircomp/rng.hpp"
#include "predicates.hpp"

namespace aircomp {

double Point3::norm() const { return std::sqrt(norm2()); }

NetworkRealization sample_bpp(int n, double radius, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_bpp: n must be >= 1");
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("sample_bpp: radius must be positive and finite");
    NetworkRealization net;
    net.radius_m = radius;
    net.seed = seed;
    net.points.reserve(static_cast<std::size_t>(n));
    Rng rng(seed);
    for (int i = 0; i < n; ++i) {
        // unit direction by rejection, radius by inverse transform u^(1/3)
        double dx, dy, dz, n2;
        do {
            dx = rng.uniform(-1.0, 1.0);
            dy = rng.uniform(-1.0, 1.0);
            dz = rng.uniform(-1.0, 1.0);
            n2 = dx * dx + dy * dy + dz * dz;
        } while (n2 > 1.0 || n2 < 1e-24);
        const double r = radius * std::cbrt(rng.uniform());
        const double s = r / std::sqrt(n2);
        net.points.push_back({dx * s, dy * s, dz * s});
    }
    return net;
}

double tetrahedron_volume(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
    return std::fabs((b - a).dot((c - a).cross(d - a))) / 6.0;
}

double tetrahedron_volume(const Tetrahedron& t, const NetworkRealization& net) {
    const auto& p = net.points;
    return tetrahedron_volume(p[static_cast<std::size_t>(t.vertex_ids[0])],
                              p[static_cast<std::size_t>(t.vertex_ids[1])],
                              p[static_cast<std::size_t>(t.vertex_ids[2])],
                              p[static_cast<std::size_t>(t.vertex_ids[3])]);
}

Circumsphere circumsphere(const Tetrahedron& t, const NetworkRealization& net) {
    const auto& pts = net.points;
    const Point3& a = pts[static_cast<std::size_t>(t.vertex_ids[0])];
    const Point3& b = pts[static_cast<std::size_t>(t.vertex_ids[1])];
    const Point3& c = pts[static_cast<std::size_t>(t.vertex_ids[2])];
    const Point3& d = pts[static_cast<std::size_t>(t.vertex_ids[3])];

    double scale = net.radius_m;
    if (!(scale > 0.0))
        for (const Point3* p : {&a, &b, &c, &d})
            scale = std::max({scale, std::fabs(p->x), std::fabs(p->y), std::fabs(p->z)});
    const double vol = tetrahedron_volume(a, b, c, d);
    if (vol < 1e-12 * scale * scale * scale)
        throw std::domain_error("circumsphere: degenerate tetrahedron");

    // 2 (v - a) . x = |v|^2 - |a|^2 for v in {b, c, d}, solved by Cramer
    const Point3 u = b - a, v = c - a, w = d - a;
    const double ru = 0.5 * u.norm2(), rv = 0.5 * v.norm2(), rw = 0.5 * w.norm2();
    const double det = u.dot(v.cross(w));
    const Point3 x{(ru * (v.y * w.z - v.z * w.y) + rv * (w.y * u.z - w.z * u.y) +
                    rw * (u.y * v.z - u.z * v.y)) / det,
                   (ru * (v.z * w.x - v.x * w.z) + rv * (w.z * u.x - w.x * u.z) +
                    rw * (u.z * v.x - u.x * v.z)) / det,
                   (ru * (v.x * w.y - v.y * w.x) + rv * (w.x * u.y - w.y * u.x) +
                    rw * (u.x * v.y - u.y * v.x)) / det};
    const Point3 center = a + x;
    const double radius = 0.25 * ((center - a).norm() + (center - b).norm() +
                                  (center - c).norm() + (center - d).norm());
    return {center, radius};
}

namespace {

using detail::insphere_sign_sos;
using detail::orient3d_sign;
using detail::orient3d_sign_sos;

// Face opposite slot i, ordered so the tet's own fourth vertex lies on the
// negative orient3d side (the face "points outward").
constexpr int kFace[4][3] = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};

// Incremental insertion with a single ghost vertex closing the hull: every
// hull face (a, b, c) carries a ghost cell (a, b, c, G) whose conflict zone
// is the open half-space beyond the face.
class DelaunayBuilder {
  public:
    explicit DelaunayBuilder(const NetworkRealization& net) : pts_(net.points) {
        ghost_ = static_cast<int>(pts_.size());
    }

    void build() {
        init_first_tet();
        for (int i = 0; i < static_cast<int>(pts_.size()); ++i) {
            if (i == init_[0] || i == init_[1] || i == init_[2] || i == init_[3]) continue;
            insert(i);
        }
    }

    void finalize(Tetrahedralization& out) const {
        for (const auto& t : tets_) {
            if (!t.alive || is_ghost(t)) continue;
            Tetrahedron tet{{t.v[0], t.v[1], t.v[2], t.v[3]}};
            std::sort(tet.vertex_ids.begin(), tet.vertex_ids.end());
            out.tetrahedra.push_back(tet);
        }
        std::sort(out.tetrahedra.begin(), out.tetrahedra.end());

        // rebuild face adjacency on the canonical list
        out.neighbors.assign(out.tetrahedra.size(), {-1, -1, -1, -1});
        std::map<std::array<int, 3>, std::pair<int, int>> face_map;
        for (int t = 0; t < static_cast<int>(out.tetrahedra.size()); ++t) {
            const auto& ids = out.tetrahedra[static_cast<std::size_t>(t)].vertex_ids;
            for (int i = 0; i < 4; ++i) {
                std::array<int, 3> key{};
                int k = 0;
                for (int j = 0; j < 4; ++j)
                    if (j != i) key[static_cast<std::size_t>(k++)] = ids[static_cast<std::size_t>(j)];
                auto [it, fresh] = face_map.try_emplace(key, std::make_pair(t, i));
                if (!fresh) {
                    const auto [ot, oi] = it->second;
                    out.neighbors[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] = ot;
                    out.neighbors[static_cast<std::size_t>(ot)][static_cast<std::size_t>(oi)] = t;
                }
            }
        }
    }

  private:
    struct Tet {
        std::array<int, 4> v;
        std::array<int, 4> nbr;
        bool alive = true;
    };

    bool is_ghost(const Tet& t) const { return t.v[3] == ghost_; }

    const Point3& pt(int id) const { return pts_[static_cast<std::size_t>(id)]; }

    void init_first_tet() {
        const int n = static_cast<int>(pts_.size());
        if (n < 5) throw std::invalid_argument("delaunay_tetrahedralize: need at least 5 points");
        int i0 = 0, i1 = -1, i2 = -1, i3 = -1;
        for (int j = 1; j < n && i1 < 0; ++j)
            if (pts_[static_cast<std::size_t>(j)].x != pts_[0].x ||
                pts_[static_cast<std::size_t>(j)].y != pts_[0].y ||
                pts_[static_cast<std::size_t>(j)].z != pts_[0].z)
                i1 = j;
        if (i1 < 0) throw std::invalid_argument("delaunay_tetrahedralize: all points coincide");
        for (int j = i1 + 1; j < n && i2 < 0; ++j) {
            const Point3 c = (pt(i1) - pt(i0)).cross(pt(j) - pt(i0));
            if (c.x != 0.0 || c.y != 0.0 || c.z != 0.0) i2 = j;  // exact: doubles, no rounding in compare
        }
        if (i2 < 0) throw std::invalid_argument("delaunay_tetrahedralize: all points collinear");
        for (int j = i2 + 1; j < n && i3 < 0; ++j)
            if (orient3d_sign(pt(i0), pt(i1), pt(i2), pt(j)) != 0) i3 = j;
        if (i3 < 0) throw std::invalid_argument("delaunay_tetrahedralize: all points coplanar");
        if (orient3d_sign(pt(i0), pt(i1), pt(i2), pt(i3)) < 0) std::swap(i1, i2);
        init_ = {i0, i1, i2, i3};

        tets_.push_back({{i0, i1, i2, i3}, {-1, -1, -1, -1}, true});
        for (int i = 0; i < 4; ++i) {
            std::array<int, 4> gv{};
            for (int j = 0; j < 3; ++j)
                gv[static_cast<std::size_t>(j)] =
                    tets_[0].v[static_cast<std::size_t>(kFace[i][j])];
            gv[3] = ghost_;
            tets_.push_back({gv, {-1, -1, -1, -1}, true});
        }
        link_all_faces();
        last_real_ = 0;
    }

    // brute-force adjacency rebuild; used only for the 5-cell initial complex
    void link_all_faces() {
        std::map<std::array<int, 3>, std::pair<int, int>> face_map;
        for (int t = 0; t < static_cast<int>(tets_.size()); ++t) {
            for (int i = 0; i < 4; ++i) {
                auto key = face_key(t, i);
                auto [it, fresh] = face_map.try_emplace(key, std::make_pair(t, i));
                if (!fresh) {
                    const auto [ot, oi] = it->second;
                    tets_[static_cast<std::size_t>(t)].nbr[static_cast<std::size_t>(i)] = ot;
                    tets_[static_cast<std::size_t>(ot)].nbr[static_cast<std::size_t>(oi)] = t;
                }
            }
        }
    }

    std::array<int, 3> face_key(int t, int slot) const {
        const auto& v = tets_[static_cast<std::size_t>(t)].v;
        std::array<int, 3> key{v[static_cast<std::size_t>(kFace[slot][0])],
                               v[static_cast<std::size_t>(kFace[slot][1])],
                               v[static_cast<std::size_t>(kFace[slot][2])]};
        std::sort(key.begin(), key.end());
        return key;
    }

    bool in_conflict(int t, int p) const {
        const Tet& tet = tets_[static_cast<std::size_t>(t)];
        if (is_ghost(tet)) {
            const Point3 q[4] = {pt(tet.v[0]), pt(tet.v[1]), pt(tet.v[2]), pt(p)};
            const int idx[4] = {tet.v[0], tet.v[1], tet.v[2], p};
            return orient3d_sign_sos(q, idx) > 0;
        }
        const Point3 q[5] = {pt(tet.v[0]), pt(tet.v[1]), pt(tet.v[2]), pt(tet.v[3]), pt(p)};
        const int idx[5] = {tet.v[0], tet.v[1], tet.v[2], tet.v[3], p};
        return insphere_sign_sos(q, idx) > 0;
    }

    // Orientation walk from the last created real tet toward p; any cell in
    // conflict with p is a valid seed (the cell containing p always is).
    int locate_conflict_seed(int p) {
        int cur = last_real_;
        if (!tets_[static_cast<std::size_t>(cur)].alive || is_ghost(tets_[static_cast<std::size_t>(cur)]))
            cur = any_alive_real();
        long steps = 0;
        const long max_steps = 4 * static_cast<long>(tets_.size()) + 64;
        int prev = -1;
        while (steps++ < max_steps) {
            const Tet& t = tets_[static_cast<std::size_t>(cur)];
            if (is_ghost(t)) {
                if (in_conflict(cur, p)) return cur;
                break;  // walked outward into a non-conflicting ghost: rescan
            }
            int next = -1;
            for (int i = 0; i < 4; ++i) {
                const int nb = t.nbr[static_cast<std::size_t>(i)];
                if (nb == prev) continue;
                const Point3 q[4] = {pt(t.v[static_cast<std::size_t>(kFace[i][0])]),
                                     pt(t.v[static_cast<std::size_t>(kFace[i][1])]),
                                     pt(t.v[static_cast<std::size_t>(kFace[i][2])]), pt(p)};
                if (orient3d_sign(q[0], q[1], q[2], q[3]) > 0) {
                    next = nb;
                    break;
                }
            }
            if (next < 0) return cur;  // no separating face: p inside cur
            prev = cur;
            cur = next;
        }
        // safety net: exhaustive scan
        for (int t = 0; t < static_cast<int>(tets_.size()); ++t)
            if (tets_[static_cast<std::size_t>(t)].alive && in_conflict(t, p)) return t;
        throw std::runtime_error("delaunay_tetrahedralize: failed to locate insertion cell");
    }

    int any_alive_real() const {
        for (int t = 0; t < static_cast<int>(tets_.size()); ++t)
            if (tets_[static_cast<std::size_t>(t)].alive && !is_ghost(tets_[static_cast<std::size_t>(t)]))
                return t;
        throw std::logic_error("delaunay_tetrahedralize: no live cells");
    }

    void insert(int p) {
        for (int id : {init_[0], init_[1], init_[2], init_[3]})
            if (pts_[static_cast<std::size_t>(p)].x == pt(id).x &&
                pts_[static_cast<std::size_t>(p)].y == pt(id).y &&
                pts_[static_cast<std::size_t>(p)].z == pt(id).z)
                throw std::invalid_argument("delaunay_tetrahedralize: duplicate point");

        const int seed = locate_conflict_seed(p);
        if (!in_conflict(seed, p))
            throw std::runtime_error("delaunay_tetrahedralize: inconsistent conflict seed");

        // flood fill of the conflict cavity
        std::vector<int> bad{seed};
        std::vector<int> stack{seed};
        std::vector<char> visited(tets_.size(), 0);
        visited[static_cast<std::size_t>(seed)] = 1;
        while (!stack.empty()) {
            const int t = stack.back();
            stack.pop_back();
            for (int i = 0; i < 4; ++i) {
                const int nb = tets_[static_cast<std::size_t>(t)].nbr[static_cast<std::size_t>(i)];
                if (nb < 0 || visited[static_cast<std::size_t>(nb)]) continue;
                visited[static_cast<std::size_t>(nb)] = 1;
                if (in_conflict(nb, p)) {
                    bad.push_back(nb);
                    stack.push_back(nb);
                }
            }
        }
        std::vector<char> is_bad(tets_.size(), 0);
        for (int t : bad) {
            is_bad[static_cast<std::size_t>(t)] = 1;
            for (int v : tets_[static_cast<std::size_t>(t)].v)
                if (v != ghost_ && pt(v).x == pt(p).x && pt(v).y == pt(p).y && pt(v).z == pt(p).z)
                    throw std::invalid_argument("delaunay_tetrahedralize: duplicate point");
        }

        // boundary faces -> new cells (face + p), linked across the cavity rim
        std::map<std::pair<int, int>, std::pair<int, int>> edge_map;  // sorted rim edge -> (tet, slot)
        std::vector<int> created;
        for (int t : bad) {
            for (int i = 0; i < 4; ++i) {
                const int nb = tets_[static_cast<std::size_t>(t)].nbr[static_cast<std::size_t>(i)];
                if (nb >= 0 && is_bad[static_cast<std::size_t>(nb)]) continue;
                const auto& tv = tets_[static_cast<std::size_t>(t)].v;
                // outward face (f0, f1, f2); reversing two entries puts p on
                // the positive side of the new cell's base
                int f0 = tv[static_cast<std::size_t>(kFace[i][0])];
                int f1 = tv[static_cast<std::size_t>(kFace[i][2])];
                int f2 = tv[static_cast<std::size_t>(kFace[i][1])];
                std::array<int, 4> nv{f0, f1, f2, p};
                if (f0 == ghost_ || f1 == ghost_ || f2 == ghost_) {
                    // rotate the ghost into slot 3 with an even permutation
                    int g = nv[0] == ghost_ ? 0 : (nv[1] == ghost_ ? 1 : 2);
                    std::swap(nv[static_cast<std::size_t>(g)], nv[3]);
                    const int o1 = (g + 1) % 3, o2 = (g + 2) % 3;
                    std::swap(nv[static_cast<std::size_t>(o1)], nv[static_cast<std::size_t>(o2)]);
                }
                const int nt = static_cast<int>(tets_.size());
                tets_.push_back({nv, {-1, -1, -1, -1}, true});
                created.push_back(nt);

                // face opposite p (or the slot p ended up opposite of) joins the outside neighbor
                int pslot = 0;
                while (tets_[static_cast<std::size_t>(nt)].v[static_cast<std::size_t>(pslot)] != p) ++pslot;
                tets_[static_cast<std::size_t>(nt)].nbr[static_cast<std::size_t>(pslot)] = nb;
                if (nb >= 0) {
                    auto& nbt = tets_[static_cast<std::size_t>(nb)];
                    for (int j = 0; j < 4; ++j)
                        if (nbt.nbr[static_cast<std::size_t>(j)] == t)
                            nbt.nbr[static_cast<std::size_t>(j)] = nt;
                }

                // remaining three faces each contain p; key them by the rim edge
                for (int s = 0; s < 4; ++s) {
                    if (s == pslot) continue;
                    int e[2];
                    int k = 0;
                    for (int j = 0; j < 4; ++j)
                        if (j != s && tets_[static_cast<std::size_t>(nt)].v[static_cast<std::size_t>(j)] != p)
                            e[k++] = tets_[static_cast<std::size_t>(nt)].v[static_cast<std::size_t>(j)];
                    const auto key = std::minmax(e[0], e[1]);
                    auto [it, fresh] = edge_map.try_emplace(key, std::make_pair(nt, s));
                    if (!fresh) {
                        const auto [ot, os] = it->second;
                        tets_[static_cast<std::size_t>(nt)].nbr[static_cast<std::size_t>(s)] = ot;
                        tets_[static_cast<std::size_t>(ot)].nbr[static_cast<std::size_t>(os)] = nt;
                    }
                }
            }
        }
        for (int t : bad) tets_[static_cast<std::size_t>(t)].alive = false;
        for (int t : created)
            if (!is_ghost(tets_[static_cast<std::size_t>(t)])) {
                last_real_ = t;
                break;
            }
    }

    const std::vector<Point3>& pts_;
    std::vector<Tet> tets_;
    std::array<int, 4> init_{};
    int ghost_ = -1;
    int last_real_ = 0;
};

}  // namespace

Tetrahedralization delaunay_tetrahedralize(const NetworkRealization& net) {
    Tetrahedralization out;
    out.source = net;
    DelaunayBuilder builder(net);
    builder.build();
    builder.finalize(out);
    return out;
}

int locate_tetrahedron_index(const Tetrahedralization& tess, const Point3& p) {
    const int n = tess.size();
    if (n == 0) throw std::invalid_argument("locate_tetrahedron: empty tessellation");
    const auto& pts = tess.source.points;

    auto orient_nonneg_all = [&](int t) {
        // p inside the closed tetrahedron iff no face strictly separates it
        const auto& ids = tess.tetrahedra[static_cast<std::size_t>(t)].vertex_ids;
        const Point3 q[4] = {pts[static_cast<std::size_t>(ids[0])], pts[static_cast<std::size_t>(ids[1])],
                             pts[static_cast<std::size_t>(ids[2])], pts[static_cast<std::size_t>(ids[3])]};
        const int ref = detail::orient3d_sign(q[0], q[1], q[2], q[3]);
        for (int i = 0; i < 4; ++i) {
            Point3 f[3];
            int k = 0;
            for (int j = 0; j < 4; ++j)
                if (j != i) f[k++] = q[j];
            const int s = detail::orient3d_sign(f[0], f[1], f[2], p);
            const int sv = detail::orient3d_sign(f[0], f[1], f[2], q[i]);
            if (s != 0 && sv != 0 && s != sv) return false;
        }
        return ref != 0 || true;
    };

    // orientation walk over the canonical adjacency
    int cur = 0, prev = -1;
    long steps = 0;
    const long max_steps = 4L * n + 64;
    while (steps++ < max_steps) {
        const auto& ids = tess.tetrahedra[static_cast<std::size_t>(cur)].vertex_ids;
        const Point3 q[4] = {pts[static_cast<std::size_t>(ids[0])], pts[static_cast<std::size_t>(ids[1])],
                             pts[static_cast<std::size_t>(ids[2])], pts[static_cast<std::size_t>(ids[3])]};
        int next = -2;
        for (int i = 0; i < 4 && next == -2; ++i) {
            Point3 f[3];
            int k = 0;
            for (int j = 0; j < 4; ++j)
                if (j != i) f[k++] = q[j];
            const int sp = detail::orient3d_sign(f[0], f[1], f[2], p);
            const int sv = detail::orient3d_sign(f[0], f[1], f[2], q[i]);
            if (sp != 0 && sv != 0 && sp != sv) {
                const int nb = tess.neighbors[static_cast<std::size_t>(cur)][static_cast<std::size_t>(i)];
                if (nb == prev && nb >= 0) continue;
                next = nb;
            }
        }
        if (next == -2) return cur;   // contained
        if (next == -1) return -1;    // left the hull
        prev = cur;
        cur = next;
    }
    for (int t = 0; t < n; ++t)
        if (orient_nonneg_all(t)) {
            // exhaustive fallback: strict containment re-check
            const auto& ids = tess.tetrahedra[static_cast<std::size_t>(t)].vertex_ids;
            const Point3 q[4] = {pts[static_cast<std::size_t>(ids[0])], pts[static_cast<std::size_t>(ids[1])],
                                 pts[static_cast<std::size_t>(ids[2])], pts[static_cast<std::size_t>(ids[3])]};
            bool inside = true;
            for (int i = 0; i < 4 && inside; ++i) {
                Point3 f[3];
                int k = 0;
                for (int j = 0; j < 4; ++j)
                    if (j != i) f[k++] = q[j];
                const int sp = detail::orient3d_sign(f[0], f[1], f[2], p);
                const int sv = detail::orient3d_sign(f[0], f[1], f[2], q[i]);
                if (sp != 0 && sv != 0 && sp != sv) inside = false;
            }
            if (inside) return t;
        }
    return -1;
}

std::optional<Tetrahedron> locate_tetrahedron(const Tetrahedralization& tess, const Point3& p) {
    const int t = locate_tetrahedron_index(tess, p);
    if (t < 0) return std::nullopt;
    return tess.tetrahedra[static_cast<std::size_t>(t)];
}

std::vector<std::pair<int, double>> k_nearest(const NetworkRealization& net, const Point3& p, int k) {
    const int n = net.size();
    if (k < 1 || k > n) throw std::invalid_argument("k_nearest: require 1 <= k <= N");
    std::vector<std::pair<int, double>> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        all[static_cast<std::size_t>(i)] = {i, (net.points[static_cast<std::size_t>(i)] - p).norm()};
    auto cmp = [](const auto& a, const auto& b) {
        return a.second < b.second || (a.second == b.second && a.first < b.first);
    };
    std::partial_sort(all.begin(), all.begin() + k, all.end(), cmp);
    all.resize(static_cast<std::size_t>(k));
    return all;
}

double mean_cell_volume(const Tetrahedralization& tess) {
    if (tess.tetrahedra.empty()) throw std::invalid_argument("mean_cell_volume: empty tessellation");
    double sum = 0.0;
    for (const auto& t : tess.tetrahedra) sum += tetrahedron_volume(t, tess.source);
    return sum / static_cast<double>(tess.size());
}

double empty_circumsphere_violation(const Tetrahedralization& tess) {
    double worst = -1.0;
    const auto& pts = tess.source.points;
    for (const auto& t : tess.tetrahedra) {
        Circumsphere cs;
        try {
            cs = circumsphere(t, tess.source);
        } catch (const std::domain_error&) {
            continue;  // flat sliver: its circumsphere excludes nothing
        }
        for (int q = 0; q < tess.source.size(); ++q) {
            if (q == t.vertex_ids[0] || q == t.vertex_ids[1] || q == t.vertex_ids[2] ||
                q == t.vertex_ids[3])
                continue;
            const double dist = (pts[static_cast<std::size_t>(q)] - cs.center).norm();
            worst = std::max(worst, (cs.radius - dist) / cs.radius);
        }
    }
    return worst;
}

double total_cell_volume(const Tetrahedralization& tess) {
    double sum = 0.0;
    for (const auto& t : tess.tetrahedra) sum += tetrahedron_volume(t, tess.source);
    return sum;
}

double hull_volume_from_boundary(const Tetrahedralization& tess) {
    const auto& pts = tess.source.points;
    double six_v = 0.0;
    for (int t = 0; t < tess.size(); ++t) {
        for (int i = 0; i < 4; ++i) {
            if (tess.neighbors[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] >= 0) continue;
            const auto& ids = tess.tetrahedra[static_cast<std::size_t>(t)].vertex_ids;
            std::array<Point3, 3> f;
            int k = 0;
            for (int j = 0; j < 4; ++j)
                if (j != i) f[static_cast<std::size_t>(k++)] = pts[static_cast<std::size_t>(ids[static_cast<std::size_t>(j)])];
            const Point3& w = pts[static_cast<std::size_t>(ids[static_cast<std::size_t>(i)])];
            // orient the boundary face outward (opposite vertex on the negative side)
            const Point3 nvec = (f[1] - f[0]).cross(f[2] - f[0]);
            if (nvec.dot(w - f[0]) > 0) std::swap(f[1], f[2]);
            six_v += f[0].dot(f[1].cross(f[2]));
        }
    }
    return std::fabs(six_v) / 6.0;
}

void realization_to_csv(const NetworkRealization& net, std::ostream& os) {
    os << "id,x,y,z\n";
    os << std::setprecision(17);
    for (int i = 0; i < net.size(); ++i) {
        const auto& p = net.points[static_cast<std::size_t>(i)];
        os << i << ',' << p.x << ',' << p.y << ',' << p.z << '\n';
    }
    os << "# radius_m=" << net.radius_m << " seed=" << net.seed << '\n';
}

std::string realization_to_csv(const NetworkRealization& net) {
    std::ostringstream os;
    realization_to_csv(net, os);
    return os.str();
}

NetworkRealization realization_from_csv(std::istream& is, double radius_m) {
    NetworkRealization net;
    net.radius_m = radius_m;
    std::string line;
    if (!std::getline(is, line) || line.rfind("id,x,y,z", 0) != 0)
        throw std::invalid_argument("realization_from_csv: missing id,x,y,z header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream meta(line);
            std::string tok;
            while (meta >> tok) {
                if (tok.rfind("radius_m=", 0) == 0 && radius_m <= 0.0)
                    net.radius_m = std::stod(tok.substr(9));
                if (tok.rfind("seed=", 0) == 0) net.seed = std::stoull(tok.substr(5));
            }
            continue;
        }
        std::istringstream row(line);
        std::string cell;
        double vals[4];
        for (int i = 0; i < 4; ++i) {
            if (!std::getline(row, cell, ',')) throw std::invalid_argument("realization_from_csv: short row");
            vals[i] = std::stod(cell);
        }
        net.points.push_back({vals[1], vals[2], vals[3]});
    }
    if (net.radius_m > 0.0)
        for (const auto& p : net.points)
            if (p.norm() > net.radius_m * (1.0 + 1e-12))
                throw std::invalid_argument("realization_from_csv: point outside the stated ball");
    return net;
}

}  // namespace aircomp
