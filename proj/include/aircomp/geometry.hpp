#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace aircomp {

struct Point3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Point3 operator+(const Point3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Point3 operator-(const Point3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Point3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Point3& o) const { return x * o.x + y * o.y + z * o.z; }
    Point3 cross(const Point3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm2() const { return dot(*this); }
    double norm() const;
};

// One draw of N transmitter positions i.i.d. uniform in the ball b(0, R).
struct NetworkRealization {
    double radius_m = 0.0;
    std::vector<Point3> points;
    std::uint64_t seed = 0;

    int size() const { return static_cast<int>(points.size()); }
};

// Vertex ids are kept sorted ascending so a tetrahedron has one identity.
struct Tetrahedron {
    std::array<int, 4> vertex_ids{};

    bool operator==(const Tetrahedron& o) const = default;
    bool operator<(const Tetrahedron& o) const { return vertex_ids < o.vertex_ids; }
};

struct Circumsphere {
    Point3 center;
    double radius = 0.0;
};

struct Tetrahedralization {
    std::vector<Tetrahedron> tetrahedra;
    // neighbors[t][i] = index of the tetrahedron sharing the face opposite
    // vertex i of tetrahedron t, or -1 on the hull boundary.
    std::vector<std::array<int, 4>> neighbors;
    NetworkRealization source;

    int size() const { return static_cast<int>(tetrahedra.size()); }
    const Point3& vertex(int id) const { return source.points[static_cast<std::size_t>(id)]; }
};

// N points i.i.d. uniform in b(0, radius); radial CDF is (r/radius)^3.
// Deterministic for a fixed (n, radius, seed).
NetworkRealization sample_bpp(int n, double radius, std::uint64_t seed);

// Incremental (Bowyer-Watson style) Delaunay tetrahedralization with exact
// geometric predicates and index-based symbolic perturbation for
// cospherical ties. Requires >= 5 points, not all coplanar.
Tetrahedralization delaunay_tetrahedralize(const NetworkRealization& net);

double tetrahedron_volume(const Point3& a, const Point3& b, const Point3& c, const Point3& d);
double tetrahedron_volume(const Tetrahedron& t, const NetworkRealization& net);

// Circumsphere through the four vertices; throws on (near-)degenerate input
// (volume below 1e-12 times the cube of the point scale).
Circumsphere circumsphere(const Tetrahedron& t, const NetworkRealization& net);

// Tetrahedron containing p (barycentric coordinates all >= -tolerance), or
// nullopt outside the convex hull.
std::optional<Tetrahedron> locate_tetrahedron(const Tetrahedralization& tess, const Point3& p);

// Index of the tetrahedron containing p, or -1.
int locate_tetrahedron_index(const Tetrahedralization& tess, const Point3& p);

// k nearest points to p with their distances, ascending. k <= N.
std::vector<std::pair<int, double>> k_nearest(const NetworkRealization& net, const Point3& p, int k);

// Arithmetic mean of tetrahedron volumes.
double mean_cell_volume(const Tetrahedralization& tess);

// Empty-circumsphere audit: largest relative penetration of any non-vertex
// point into any tetrahedron's circumsphere, max over the complex of
// (radius - dist)/radius. A valid Delaunay complex stays below ~1e-9.
double empty_circumsphere_violation(const Tetrahedralization& tess);

// Sum of tetrahedron volumes and, independently, the volume enclosed by the
// boundary faces via the divergence theorem. Equal for a valid complex.
double total_cell_volume(const Tetrahedralization& tess);
double hull_volume_from_boundary(const Tetrahedralization& tess);

// CSV round trip: header "id,x,y,z", one point per row, full precision.
void realization_to_csv(const NetworkRealization& net, std::ostream& os);
std::string realization_to_csv(const NetworkRealization& net);
NetworkRealization realization_from_csv(std::istream& is, double radius_m);

}  // namespace aircomp
