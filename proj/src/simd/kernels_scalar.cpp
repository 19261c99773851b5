#include <cmath>

#include "kernels_internal.hpp"

// Reference kernels. These define the semantics; the vector variants must
// agree with them up to floating-point reassociation.

namespace stableplace::simd {

void SoaTriangles::reserve(std::size_t n) {
  ax.reserve(n);
  ay.reserve(n);
  az.reserve(n);
  e1x.reserve(n);
  e1y.reserve(n);
  e1z.reserve(n);
  e2x.reserve(n);
  e2y.reserve(n);
  e2z.reserve(n);
}

void SoaTriangles::push(const geom::Vec3& a, const geom::Vec3& b,
                        const geom::Vec3& c) {
  ax.push_back(a.x);
  ay.push_back(a.y);
  az.push_back(a.z);
  e1x.push_back(b.x - a.x);
  e1y.push_back(b.y - a.y);
  e1z.push_back(b.z - a.z);
  e2x.push_back(c.x - a.x);
  e2y.push_back(c.y - a.y);
  e2z.push_back(c.z - a.z);
}

SoaTriangles SoaTriangles::from(const geom::TriMesh& mesh) {
  SoaTriangles t;
  t.reserve(mesh.faces.size());
  for (const auto& f : mesh.faces)
    t.push(mesh.vertices[f[0]], mesh.vertices[f[1]], mesh.vertices[f[2]]);
  return t;
}

namespace detail {

std::size_t count_inliers_scalar(const SoaPoints& pts, const geom::Vec3& n,
                                 double d, double tol) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double dist = n.x * pts.x[i] + n.y * pts.y[i] + n.z * pts.z[i] + d;
    if (std::fabs(dist) <= tol) ++count;
  }
  return count;
}

void abs_plane_distances_scalar(const SoaPoints& pts, const geom::Vec3& n,
                                double d, double* out) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    out[i] = std::fabs(n.x * pts.x[i] + n.y * pts.y[i] + n.z * pts.z[i] + d);
}

void transform_points_scalar(const SoaPoints& in, const geom::Mat3& R,
                             const geom::Vec3& t, SoaPoints& out) {
  out.resize(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    const double px = in.x[i], py = in.y[i], pz = in.z[i];
    out.x[i] = R.m[0] * px + R.m[1] * py + R.m[2] * pz + t.x;
    out.y[i] = R.m[3] * px + R.m[4] * py + R.m[5] * pz + t.y;
    out.z[i] = R.m[6] * px + R.m[7] * py + R.m[8] * pz + t.z;
  }
}

RayHit raycast_nearest_scalar(const SoaTriangles& tris, const geom::Vec3& orig,
                              const geom::Vec3& dir, double tmax) {
  // Small slack on the barycentric bounds so rays through shared edges
  // register on at least one of the adjacent triangles.
  const double eps_det = 1e-14;
  const double slack = 1e-12;
  RayHit best;
  best.t = tmax;
  for (std::size_t i = 0; i < tris.size(); ++i) {
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

}  // namespace detail
}  // namespace stableplace::simd
