#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stableplace/geom/types.hpp"

// Data-parallel inner loops shared by the RANSAC fitters, the point-cloud
// transforms, and the depth renderer. Every kernel has a scalar reference
// implementation and an AVX2 variant; the active one is picked at runtime
// from CPU capabilities (override with STABLEPLACE_SIMD=scalar|avx2).
// Equivalence of the two is covered by dedicated tests.

namespace stableplace::simd {

enum class Isa { Scalar, Avx2 };

Isa active_isa();
// Forces a specific ISA; throws ValidationError if unsupported on this CPU.
void force_isa(Isa isa);
const char* isa_name(Isa isa);

// Structure-of-arrays point buffer.
struct SoaPoints {
  std::vector<double> x, y, z;

  std::size_t size() const { return x.size(); }
  void resize(std::size_t n) {
    x.resize(n);
    y.resize(n);
    z.resize(n);
  }
  geom::Vec3 at(std::size_t i) const { return {x[i], y[i], z[i]}; }
  void set(std::size_t i, const geom::Vec3& p) {
    x[i] = p.x;
    y[i] = p.y;
    z[i] = p.z;
  }

  static SoaPoints from(const std::vector<geom::Vec3>& pts) {
    SoaPoints s;
    s.resize(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) s.set(i, pts[i]);
    return s;
  }
};

// Per-triangle base vertex plus edge vectors, ready for intersection tests.
struct SoaTriangles {
  std::vector<double> ax, ay, az;
  std::vector<double> e1x, e1y, e1z;
  std::vector<double> e2x, e2y, e2z;

  std::size_t size() const { return ax.size(); }
  void reserve(std::size_t n);
  void push(const geom::Vec3& a, const geom::Vec3& b, const geom::Vec3& c);

  static SoaTriangles from(const geom::TriMesh& mesh);
};

struct RayHit {
  double t = 0.0;
  int tri = -1;  // -1 = no hit

  bool hit() const { return tri >= 0; }
};

// Number of points with |n . p + d| <= tol.
std::size_t count_inliers(const SoaPoints& pts, const geom::Vec3& n, double d,
                          double tol);

// Writes |n . p + d| for every point.
void abs_plane_distances(const SoaPoints& pts, const geom::Vec3& n, double d,
                         double* out);

// out[i] = R * in[i] + t. `out` may alias `in`.
void transform_points(const SoaPoints& in, const geom::Mat3& R,
                      const geom::Vec3& t, SoaPoints& out);

// Nearest intersection of one ray with all triangles (Moller-Trumbore,
// double precision). Ties on t resolve to the lowest triangle index.
RayHit raycast_nearest(const SoaTriangles& tris, const geom::Vec3& orig,
                       const geom::Vec3& dir, double tmax);

}  // namespace stableplace::simd
