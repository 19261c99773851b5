#include <cstdlib>
#include <cstring>

#include "kernels_internal.hpp"
#include "stableplace/error.hpp"

namespace stableplace::simd {

namespace detail {

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

}  // namespace detail

namespace {

Isa pick_initial_isa() {
  if (const char* env = std::getenv("STABLEPLACE_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Isa::Scalar;
    if (std::strcmp(env, "avx2") == 0 && detail::avx2_supported())
      return Isa::Avx2;
    // Anything else (including an unsupported request) falls through to
    // auto-detection.
  }
  return detail::avx2_supported() ? Isa::Avx2 : Isa::Scalar;
}

Isa& current_isa() {
  static Isa isa = pick_initial_isa();
  return isa;
}

}  // namespace

Isa active_isa() { return current_isa(); }

void force_isa(Isa isa) {
  if (isa == Isa::Avx2 && !detail::avx2_supported())
    fail(ErrorKind::ValidationError, "AVX2 not available on this CPU");
  current_isa() = isa;
}

const char* isa_name(Isa isa) {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

std::size_t count_inliers(const SoaPoints& pts, const geom::Vec3& n, double d,
                          double tol) {
  return current_isa() == Isa::Avx2
             ? detail::count_inliers_avx2(pts, n, d, tol)
             : detail::count_inliers_scalar(pts, n, d, tol);
}

void abs_plane_distances(const SoaPoints& pts, const geom::Vec3& n, double d,
                         double* out) {
  current_isa() == Isa::Avx2 ? detail::abs_plane_distances_avx2(pts, n, d, out)
                             : detail::abs_plane_distances_scalar(pts, n, d,
                                                                  out);
}

void transform_points(const SoaPoints& in, const geom::Mat3& R,
                      const geom::Vec3& t, SoaPoints& out) {
  current_isa() == Isa::Avx2 ? detail::transform_points_avx2(in, R, t, out)
                             : detail::transform_points_scalar(in, R, t, out);
}

RayHit raycast_nearest(const SoaTriangles& tris, const geom::Vec3& orig,
                       const geom::Vec3& dir, double tmax) {
  return current_isa() == Isa::Avx2
             ? detail::raycast_nearest_avx2(tris, orig, dir, tmax)
             : detail::raycast_nearest_scalar(tris, orig, dir, tmax);
}

}  // namespace stableplace::simd
