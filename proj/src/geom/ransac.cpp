#include "stableplace/geom/ransac.hpp"

#include <cmath>

#include "stableplace/rng.hpp"
#include "stableplace/simd/kernels.hpp"

namespace stableplace::geom {

double bounding_sphere_radius(const PointCloud& cloud) {
  if (cloud.points.empty()) return 0.0;
  Vec3 centroid;
  for (const auto& p : cloud.points) centroid += p;
  centroid = centroid / static_cast<double>(cloud.size());
  double r2 = 0.0;
  for (const auto& p : cloud.points) r2 = std::fmax(r2, norm2(p - centroid));
  return std::sqrt(r2);
}

PlaneModel fit_plane_ransac(const PointCloud& cloud, double tolerance,
                            int iterations, std::uint64_t seed) {
  cloud.validate();
  const std::size_t n = cloud.size();
  if (n < 3)
    fail(ErrorKind::DegenerateInput, "plane fit needs at least 3 points");
  if (!(tolerance > 0.0))
    fail(ErrorKind::DegenerateInput, "inlier tolerance must be positive");
  if (iterations < 1)
    fail(ErrorKind::DegenerateInput, "iteration count must be positive");

  const simd::SoaPoints soa = simd::SoaPoints::from(cloud.points);
  Rng rng(seed);

  // Degenerate (near-collinear) samples still consume their draws so the
  // stream stays aligned for reproducibility.
  const double cross_floor = 1e-24;

  Vec3 best_n;
  double best_d = 0.0;
  std::size_t best_count = 0;

  for (int it = 0; it < iterations; ++it) {
    const std::size_t i = rng.index(n);
    std::size_t j = rng.index(n);
    std::size_t k = rng.index(n);
    if (i == j || i == k || j == k) continue;
    const Vec3& a = cloud.points[i];
    const Vec3 c12 = cross(cloud.points[j] - a, cloud.points[k] - a);
    if (norm2(c12) < cross_floor) continue;
    const Vec3 nrm = normalized(c12);
    const double d = -dot(nrm, a);
    const std::size_t count = simd::count_inliers(soa, nrm, d, tolerance);
    if (count > best_count) {
      best_count = count;
      best_n = nrm;
      best_d = d;
    }
  }

  if (best_count < 3)
    fail(ErrorKind::NoPlaneFound, "no sample produced 3 or more inliers");

  PlaneModel plane;
  plane.n = best_n;
  plane.d = best_d;
  if (plane.d > 0.0 ||
      (std::fabs(plane.d) <= 1e-12 && [&] {
        const double ax = std::fabs(plane.n.x), ay = std::fabs(plane.n.y),
                     az = std::fabs(plane.n.z);
        const double lead =
            (ax >= ay && ax >= az) ? plane.n.x : (ay >= az ? plane.n.y
                                                           : plane.n.z);
        return lead < 0.0;
      }())) {
    plane.n = -plane.n;
    plane.d = -plane.d;
  }
  plane.tolerance = tolerance;
  for (std::size_t p = 0; p < n; ++p)
    if (std::fabs(plane.signed_distance(cloud.points[p])) <= tolerance)
      plane.inliers.push_back(static_cast<int>(p));
  return plane;
}

}  // namespace stableplace::geom
