#pragma once

#include "stableplace/simd/kernels.hpp"

// Per-ISA entry points wired up by the dispatch table.

namespace stableplace::simd::detail {

std::size_t count_inliers_scalar(const SoaPoints&, const geom::Vec3&, double,
                                 double);
void abs_plane_distances_scalar(const SoaPoints&, const geom::Vec3&, double,
                                double*);
void transform_points_scalar(const SoaPoints&, const geom::Mat3&,
                             const geom::Vec3&, SoaPoints&);
RayHit raycast_nearest_scalar(const SoaTriangles&, const geom::Vec3&,
                              const geom::Vec3&, double);

bool avx2_supported();

std::size_t count_inliers_avx2(const SoaPoints&, const geom::Vec3&, double,
                               double);
void abs_plane_distances_avx2(const SoaPoints&, const geom::Vec3&, double,
                              double*);
void transform_points_avx2(const SoaPoints&, const geom::Mat3&,
                           const geom::Vec3&, SoaPoints&);
RayHit raycast_nearest_avx2(const SoaTriangles&, const geom::Vec3&,
                            const geom::Vec3&, double);

}  // namespace stableplace::simd::detail
