#include <cmath>

#include "kernels_internal.hpp"

// AVX2/FMA variants, 4 doubles per iteration with a scalar remainder loop.
// This translation unit is the only one compiled with -mavx2; everything
// here stays behind the runtime dispatch check.

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace stableplace::simd::detail {

namespace {

inline __m256d abs_pd(__m256d v) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  return _mm256_andnot_pd(sign, v);
}

}  // namespace

std::size_t count_inliers_avx2(const SoaPoints& pts, const geom::Vec3& n,
                               double d, double tol) {
  const std::size_t size = pts.size();
  const std::size_t main = size - size % 4;
  const __m256d nx = _mm256_set1_pd(n.x);
  const __m256d ny = _mm256_set1_pd(n.y);
  const __m256d nz = _mm256_set1_pd(n.z);
  const __m256d vd = _mm256_set1_pd(d);
  const __m256d vtol = _mm256_set1_pd(tol);
  std::size_t count = 0;
  for (std::size_t i = 0; i < main; i += 4) {
    const __m256d x = _mm256_loadu_pd(&pts.x[i]);
    const __m256d y = _mm256_loadu_pd(&pts.y[i]);
    const __m256d z = _mm256_loadu_pd(&pts.z[i]);
    __m256d dist = _mm256_fmadd_pd(nx, x, vd);
    dist = _mm256_fmadd_pd(ny, y, dist);
    dist = _mm256_fmadd_pd(nz, z, dist);
    const __m256d ok = _mm256_cmp_pd(abs_pd(dist), vtol, _CMP_LE_OQ);
    count += static_cast<std::size_t>(
        __builtin_popcount(_mm256_movemask_pd(ok)));
  }
  for (std::size_t i = main; i < size; ++i) {
    const double dist = n.x * pts.x[i] + n.y * pts.y[i] + n.z * pts.z[i] + d;
    if (std::fabs(dist) <= tol) ++count;
  }
  return count;
}

void abs_plane_distances_avx2(const SoaPoints& pts, const geom::Vec3& n,
                              double d, double* out) {
  const std::size_t size = pts.size();
  const std::size_t main = size - size % 4;
  const __m256d nx = _mm256_set1_pd(n.x);
  const __m256d ny = _mm256_set1_pd(n.y);
  const __m256d nz = _mm256_set1_pd(n.z);
  const __m256d vd = _mm256_set1_pd(d);
  for (std::size_t i = 0; i < main; i += 4) {
    const __m256d x = _mm256_loadu_pd(&pts.x[i]);
    const __m256d y = _mm256_loadu_pd(&pts.y[i]);
    const __m256d z = _mm256_loadu_pd(&pts.z[i]);
    __m256d dist = _mm256_fmadd_pd(nx, x, vd);
    dist = _mm256_fmadd_pd(ny, y, dist);
    dist = _mm256_fmadd_pd(nz, z, dist);
    _mm256_storeu_pd(out + i, abs_pd(dist));
  }
  for (std::size_t i = main; i < size; ++i)
    out[i] = std::fabs(n.x * pts.x[i] + n.y * pts.y[i] + n.z * pts.z[i] + d);
}

void transform_points_avx2(const SoaPoints& in, const geom::Mat3& R,
                           const geom::Vec3& t, SoaPoints& out) {
  const std::size_t size = in.size();
  out.resize(size);
  const std::size_t main = size - size % 4;
  const __m256d m0 = _mm256_set1_pd(R.m[0]), m1 = _mm256_set1_pd(R.m[1]),
                m2 = _mm256_set1_pd(R.m[2]), m3 = _mm256_set1_pd(R.m[3]),
                m4 = _mm256_set1_pd(R.m[4]), m5 = _mm256_set1_pd(R.m[5]),
                m6 = _mm256_set1_pd(R.m[6]), m7 = _mm256_set1_pd(R.m[7]),
                m8 = _mm256_set1_pd(R.m[8]);
  const __m256d tx = _mm256_set1_pd(t.x), ty = _mm256_set1_pd(t.y),
                tz = _mm256_set1_pd(t.z);
  for (std::size_t i = 0; i < main; i += 4) {
    const __m256d px = _mm256_loadu_pd(&in.x[i]);
    const __m256d py = _mm256_loadu_pd(&in.y[i]);
    const __m256d pz = _mm256_loadu_pd(&in.z[i]);
    __m256d ox = _mm256_fmadd_pd(m0, px, tx);
    ox = _mm256_fmadd_pd(m1, py, ox);
    ox = _mm256_fmadd_pd(m2, pz, ox);
    __m256d oy = _mm256_fmadd_pd(m3, px, ty);
    oy = _mm256_fmadd_pd(m4, py, oy);
    oy = _mm256_fmadd_pd(m5, pz, oy);
    __m256d oz = _mm256_fmadd_pd(m6, px, tz);
    oz = _mm256_fmadd_pd(m7, py, oz);
    oz = _mm256_fmadd_pd(m8, pz, oz);
    _mm256_storeu_pd(&out.x[i], ox);
    _mm256_storeu_pd(&out.y[i], oy);
    _mm256_storeu_pd(&out.z[i], oz);
  }
  for (std::size_t i = main; i < size; ++i) {
    const double px = in.x[i], py = in.y[i], pz = in.z[i];
    out.x[i] = R.m[0] * px + R.m[1] * py + R.m[2] * pz + t.x;
    out.y[i] = R.m[3] * px + R.m[4] * py + R.m[5] * pz + t.y;
    out.z[i] = R.m[6] * px + R.m[7] * py + R.m[8] * pz + t.z;
  }
}

RayHit raycast_nearest_avx2(const SoaTriangles& tris, const geom::Vec3& orig,
                            const geom::Vec3& dir, double tmax) {
  const double eps_det = 1e-14;
  const double slack = 1e-12;
  const std::size_t size = tris.size();
  const std::size_t main = size - size % 4;

  const __m256d dx = _mm256_set1_pd(dir.x), dy = _mm256_set1_pd(dir.y),
                dz = _mm256_set1_pd(dir.z);
  const __m256d ox = _mm256_set1_pd(orig.x), oy = _mm256_set1_pd(orig.y),
                oz = _mm256_set1_pd(orig.z);
  const __m256d veps = _mm256_set1_pd(eps_det);
  const __m256d vlo = _mm256_set1_pd(-slack);
  const __m256d vhi = _mm256_set1_pd(1.0 + slack);
  const __m256d vtmin = _mm256_set1_pd(1e-12);

  RayHit best;
  best.t = tmax;
  alignas(32) double tbuf[4];

  for (std::size_t i = 0; i < main; i += 4) {
    const __m256d e1x = _mm256_loadu_pd(&tris.e1x[i]);
    const __m256d e1y = _mm256_loadu_pd(&tris.e1y[i]);
    const __m256d e1z = _mm256_loadu_pd(&tris.e1z[i]);
    const __m256d e2x = _mm256_loadu_pd(&tris.e2x[i]);
    const __m256d e2y = _mm256_loadu_pd(&tris.e2y[i]);
    const __m256d e2z = _mm256_loadu_pd(&tris.e2z[i]);

    const __m256d px = _mm256_fmsub_pd(dy, e2z, _mm256_mul_pd(dz, e2y));
    const __m256d py = _mm256_fmsub_pd(dz, e2x, _mm256_mul_pd(dx, e2z));
    const __m256d pz = _mm256_fmsub_pd(dx, e2y, _mm256_mul_pd(dy, e2x));

    __m256d det = _mm256_mul_pd(e1x, px);
    det = _mm256_fmadd_pd(e1y, py, det);
    det = _mm256_fmadd_pd(e1z, pz, det);

    __m256d active = _mm256_cmp_pd(abs_pd(det), veps, _CMP_GE_OQ);
    if (_mm256_movemask_pd(active) == 0) continue;

    const __m256d inv = _mm256_div_pd(_mm256_set1_pd(1.0), det);
    const __m256d vx = _mm256_sub_pd(ox, _mm256_loadu_pd(&tris.ax[i]));
    const __m256d vy = _mm256_sub_pd(oy, _mm256_loadu_pd(&tris.ay[i]));
    const __m256d vz = _mm256_sub_pd(oz, _mm256_loadu_pd(&tris.az[i]));

    __m256d u = _mm256_mul_pd(vx, px);
    u = _mm256_fmadd_pd(vy, py, u);
    u = _mm256_fmadd_pd(vz, pz, u);
    u = _mm256_mul_pd(u, inv);
    active = _mm256_and_pd(active, _mm256_cmp_pd(u, vlo, _CMP_GE_OQ));
    active = _mm256_and_pd(active, _mm256_cmp_pd(u, vhi, _CMP_LE_OQ));
    if (_mm256_movemask_pd(active) == 0) continue;

    const __m256d qx = _mm256_fmsub_pd(vy, e1z, _mm256_mul_pd(vz, e1y));
    const __m256d qy = _mm256_fmsub_pd(vz, e1x, _mm256_mul_pd(vx, e1z));
    const __m256d qz = _mm256_fmsub_pd(vx, e1y, _mm256_mul_pd(vy, e1x));

    __m256d v = _mm256_mul_pd(dx, qx);
    v = _mm256_fmadd_pd(dy, qy, v);
    v = _mm256_fmadd_pd(dz, qz, v);
    v = _mm256_mul_pd(v, inv);
    active = _mm256_and_pd(active, _mm256_cmp_pd(v, vlo, _CMP_GE_OQ));
    active = _mm256_and_pd(active,
                           _mm256_cmp_pd(_mm256_add_pd(u, v), vhi, _CMP_LE_OQ));
    if (_mm256_movemask_pd(active) == 0) continue;

    __m256d t = _mm256_mul_pd(e2x, qx);
    t = _mm256_fmadd_pd(e2y, qy, t);
    t = _mm256_fmadd_pd(e2z, qz, t);
    t = _mm256_mul_pd(t, inv);
    active = _mm256_and_pd(active, _mm256_cmp_pd(t, vtmin, _CMP_GT_OQ));
    active = _mm256_and_pd(active,
                           _mm256_cmp_pd(t, _mm256_set1_pd(best.t), _CMP_LT_OQ));
    int mask = _mm256_movemask_pd(active);
    if (mask == 0) continue;

    _mm256_store_pd(tbuf, t);
    // Scan lanes in index order so equal-t ties resolve like the scalar loop.
    for (int lane = 0; lane < 4; ++lane) {
      if ((mask & (1 << lane)) && tbuf[lane] < best.t) {
        best.t = tbuf[lane];
        best.tri = static_cast<int>(i) + lane;
      }
    }
  }

  for (std::size_t i = main; i < size; ++i) {
    const double e1x = tris.e1x[i], e1y = tris.e1y[i], e1z = tris.e1z[i];
    const double e2x = tris.e2x[i], e2y = tris.e2y[i], e2z = tris.e2z[i];
    const double px = dir.y * e2z - dir.z * e2y;
    const double py = dir.z * e2x - dir.x * e2z;
    const double pz = dir.x * e2y - dir.y * e2x;
    const double det = e1x * px + e1y * py + e1z * pz;
    if (std::fabs(det) < eps_det) continue;
    const double inv = 1.0 / det;
    const double tx = orig.x - tris.ax[i];
    const double ty = orig.y - tris.ay[i];
    const double tz = orig.z - tris.az[i];
    const double u = (tx * px + ty * py + tz * pz) * inv;
    if (u < -slack || u > 1.0 + slack) continue;
    const double qx = ty * e1z - tz * e1y;
    const double qy = tz * e1x - tx * e1z;
    const double qz = tx * e1y - ty * e1x;
    const double v = (dir.x * qx + dir.y * qy + dir.z * qz) * inv;
    if (v < -slack || u + v > 1.0 + slack) continue;
    const double t = (e2x * qx + e2y * qy + e2z * qz) * inv;
    if (t > 1e-12 && t < best.t) {
      best.t = t;
      best.tri = static_cast<int>(i);
    }
  }

  if (!best.hit()) best.t = 0.0;
  return best;
}

}  // namespace stableplace::simd::detail

#else  // no AVX2 at compile time: dispatch never selects these.

namespace stableplace::simd::detail {

std::size_t count_inliers_avx2(const SoaPoints& pts, const geom::Vec3& n,
                               double d, double tol) {
  return count_inliers_scalar(pts, n, d, tol);
}
void abs_plane_distances_avx2(const SoaPoints& pts, const geom::Vec3& n,
                              double d, double* out) {
  abs_plane_distances_scalar(pts, n, d, out);
}
void transform_points_avx2(const SoaPoints& in, const geom::Mat3& R,
                           const geom::Vec3& t, SoaPoints& out) {
  transform_points_scalar(in, R, t, out);
}
RayHit raycast_nearest_avx2(const SoaTriangles& tris, const geom::Vec3& orig,
                            const geom::Vec3& dir, double tmax) {
  return raycast_nearest_scalar(tris, orig, dir, tmax);
}

}  // namespace stableplace::simd::detail

#endif
