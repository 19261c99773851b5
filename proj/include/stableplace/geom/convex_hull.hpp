#pragma once

#include "stableplace/geom/types.hpp"

namespace stableplace::geom {

// Convex hull of a point set as a triangulated surface with outward-facing
// CCW faces. Duplicate inputs within 1e-12 are merged first. Requires at
// least four points spanning three dimensions; throws DegenerateInput
// otherwise. Deterministic: ties in extreme-point selection resolve
// lexicographically (x, then y, then z), so equal inputs give equal hulls.
TriMesh convex_hull(const PointCloud& cloud);
TriMesh convex_hull(const std::vector<Point3>& points);

}  // namespace stableplace::geom
