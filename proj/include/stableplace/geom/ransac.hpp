#pragma once

#include <cstdint>

#include "stableplace/geom/types.hpp"

namespace stableplace::geom {

// RANSAC plane fit: draws 3-point samples for a fixed number of iterations
// and keeps the plane with the most inliers (first such plane on ties, so a
// fixed seed reproduces bit-identically). The plane sign is normalized to
// d <= 0; when |d| ~ 0 the largest-magnitude normal component is made
// positive. Throws DegenerateInput for fewer than 3 points or a
// non-positive tolerance, NoPlaneFound when no iteration yields 3+ inliers.
PlaneModel fit_plane_ransac(const PointCloud& cloud, double tolerance,
                            int iterations, std::uint64_t seed);

// Radius of the cloud around its centroid; the conventional scale for
// relative RANSAC tolerances.
double bounding_sphere_radius(const PointCloud& cloud);

}  // namespace stableplace::geom
