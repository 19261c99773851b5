#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "stableplace/error.hpp"
#include "stableplace/geom/vec3.hpp"

namespace stableplace::geom {

using Point3 = Vec3;

// Points plus optional per-point attributes. Attribute vectors are either
// empty or exactly points.size() long.
struct PointCloud {
  std::vector<Point3> points;
  std::vector<double> scores;  // stability scores in [0, 1]
  std::vector<int> labels;     // instance / plane labels, -1 = unlabeled

  std::size_t size() const { return points.size(); }
  bool has_scores() const { return !scores.empty(); }
  bool has_labels() const { return !labels.empty(); }

  void validate() const {
    if (!scores.empty() && scores.size() != points.size())
      fail(ErrorKind::ValidationError, "score column length mismatch");
    if (!labels.empty() && labels.size() != points.size())
      fail(ErrorKind::ValidationError, "label column length mismatch");
    for (const auto& p : points)
      if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
        fail(ErrorKind::ValidationError, "non-finite point coordinate");
    for (double s : scores)
      if (!(s >= 0.0 && s <= 1.0))
        fail(ErrorKind::ValidationError, "score outside [0, 1]");
  }
};

// Indexed triangle mesh. Faces are CCW when viewed from outside.
struct TriMesh {
  std::vector<Point3> vertices;
  std::vector<std::array<int, 3>> faces;

  Vec3 face_normal(std::size_t f) const {
    const auto& t = faces[f];
    const Vec3 e1 = vertices[t[1]] - vertices[t[0]];
    const Vec3 e2 = vertices[t[2]] - vertices[t[0]];
    return normalized(cross(e1, e2));
  }

  double face_area(std::size_t f) const {
    const auto& t = faces[f];
    const Vec3 e1 = vertices[t[1]] - vertices[t[0]];
    const Vec3 e2 = vertices[t[2]] - vertices[t[0]];
    return 0.5 * norm(cross(e1, e2));
  }

  void validate() const {
    const int n = static_cast<int>(vertices.size());
    for (const auto& v : vertices)
      if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z))
        fail(ErrorKind::ValidationError, "non-finite vertex coordinate");
    for (std::size_t f = 0; f < faces.size(); ++f) {
      for (int k = 0; k < 3; ++k)
        if (faces[f][k] < 0 || faces[f][k] >= n)
          fail(ErrorKind::ValidationError, "face references missing vertex");
      if (face_area(f) <= 0.0)
        fail(ErrorKind::ValidationError, "degenerate zero-area face");
    }
  }
};

// World-from-object transform: p_world = R * p + T.
struct RigidPose {
  Mat3 R;
  Vec3 T;

  Vec3 apply(const Vec3& p) const { return R * p + T; }

  void validate() const {
    if (!is_rotation(R))
      fail(ErrorKind::ValidationError, "pose rotation is not orthonormal");
    if (!std::isfinite(T.x) || !std::isfinite(T.y) || !std::isfinite(T.z))
      fail(ErrorKind::ValidationError, "non-finite pose translation");
  }
};

// Plane a*x + b*y + c*z + d = 0 with unit (a, b, c), plus the fit context.
struct PlaneModel {
  Vec3 n;
  double d = 0.0;
  double tolerance = 0.0;    // inlier tolerance used during the fit, meters
  std::vector<int> inliers;  // indices into the source cloud

  double signed_distance(const Vec3& p) const { return dot(n, p) + d; }
};

// PCA-aligned box. Rows of `axes` are the unit box axes ordered by
// descending half-extent; the matrix is a proper rotation.
struct ObbModel {
  Vec3 center;
  Mat3 axes;
  Vec3 half;  // half-extents, descending
};

}  // namespace stableplace::geom
