#pragma once

#include "aircomp/geometry.hpp"

namespace aircomp::detail {

// Exact-sign geometric predicates: evaluated in double with a conservative
// forward error bound, falling back to exact rational arithmetic when the
// filter is inconclusive. Exact zeros (degenerate configurations) can be
// resolved by deterministic index-based symbolic perturbation: points are
// conceptually displaced by magnitudes that grow with point index and
// shrink x -> y -> z, so every tie breaks the same way in every test.

// Sign of det[a-d, b-d, c-d]. Zero iff the four points are exactly coplanar.
int orient3d_sign(const Point3& a, const Point3& b, const Point3& c, const Point3& d);

// As above; exact ties resolved via the perturbation hierarchy. idx are the
// global point indices of (a, b, c, d). Throws if the configuration stays
// degenerate under all perturbations (duplicate points).
int orient3d_sign_sos(const Point3 p[4], const int idx[4]);

// Sign of the standard 4x4 lifted determinant. For a positively oriented
// tetrahedron (a, b, c, d) the sign is > 0 iff e lies strictly inside its
// circumsphere, < 0 strictly outside, 0 exactly on it.
int insphere_sign(const Point3& a, const Point3& b, const Point3& c, const Point3& d,
                  const Point3& e);

// As above with ties resolved by perturbation; p/idx order (a,b,c,d,e).
int insphere_sign_sos(const Point3 p[5], const int idx[5]);

}  // namespace aircomp::detail
