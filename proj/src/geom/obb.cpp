#include "stableplace/geom/obb.hpp"

#include <algorithm>
#include <cmath>

#include "stableplace/geom/convex_hull.hpp"

namespace stableplace::geom {

SymEigen3 sym_eigen3(const Mat3& sym) {
  Mat3 a = sym;
  Mat3 v = Mat3::identity();

  for (int sweep = 0; sweep < 64; ++sweep) {
    const double off = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) +
                       a(1, 2) * a(1, 2);
    const double diag = a(0, 0) * a(0, 0) + a(1, 1) * a(1, 1) +
                        a(2, 2) * a(2, 2);
    if (off <= 1e-30 * (diag + 1e-300)) break;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::fabs(theta) +
                          std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        Mat3 rot = Mat3::identity();
        rot(p, p) = c;
        rot(q, q) = c;
        rot(p, q) = s;
        rot(q, p) = -s;
        a = rot.transposed() * a * rot;
        v = v * rot;
      }
    }
  }

  // Columns of v are eigenvectors; sort descending by eigenvalue.
  int order[3] = {0, 1, 2};
  const double ev[3] = {a(0, 0), a(1, 1), a(2, 2)};
  std::sort(order, order + 3, [&](int i, int j) { return ev[i] > ev[j]; });

  SymEigen3 out;
  out.values = {ev[order[0]], ev[order[1]], ev[order[2]]};
  for (int i = 0; i < 3; ++i) {
    Vec3 e = normalized(v.col(order[i]));
    // Canonical sign: largest-magnitude component positive.
    const double ax = std::fabs(e.x), ay = std::fabs(e.y),
                 az = std::fabs(e.z);
    const double lead = (ax >= ay && ax >= az) ? e.x : (ay >= az ? e.y : e.z);
    if (lead < 0.0) e = -e;
    out.vectors.set_row(i, e);
  }
  // Right-handed basis: flip the last row if needed.
  if (out.vectors.det() < 0.0)
    out.vectors.set_row(2, -out.vectors.row(2));
  return out;
}

ObbModel pca_obb(const PointCloud& cloud) {
  cloud.validate();
  const TriMesh hull = convex_hull(cloud);  // DegenerateInput propagates

  Vec3 mean;
  for (const auto& v : hull.vertices) mean += v;
  mean = mean / static_cast<double>(hull.vertices.size());

  Mat3 cov;
  cov.m.fill(0.0);
  for (const auto& v : hull.vertices) {
    const Vec3 d = v - mean;
    cov(0, 0) += d.x * d.x;
    cov(0, 1) += d.x * d.y;
    cov(0, 2) += d.x * d.z;
    cov(1, 1) += d.y * d.y;
    cov(1, 2) += d.y * d.z;
    cov(2, 2) += d.z * d.z;
  }
  cov(1, 0) = cov(0, 1);
  cov(2, 0) = cov(0, 2);
  cov(2, 1) = cov(1, 2);
  const double inv_n = 1.0 / static_cast<double>(hull.vertices.size());
  for (auto& x : cov.m) x *= inv_n;

  const SymEigen3 eig = sym_eigen3(cov);

  // Project the whole cloud for the extents; the eigenbasis only sets
  // directions.
  Vec3 lo{1e300, 1e300, 1e300}, hi{-1e300, -1e300, -1e300};
  for (const auto& p : cloud.points) {
    for (int i = 0; i < 3; ++i) {
      const double t = dot(eig.vectors.row(i), p);
      if (i == 0) {
        lo.x = std::fmin(lo.x, t);
        hi.x = std::fmax(hi.x, t);
      } else if (i == 1) {
        lo.y = std::fmin(lo.y, t);
        hi.y = std::fmax(hi.y, t);
      } else {
        lo.z = std::fmin(lo.z, t);
        hi.z = std::fmax(hi.z, t);
      }
    }
  }

  ObbModel obb;
  obb.axes = eig.vectors;
  obb.half = {(hi.x - lo.x) * 0.5, (hi.y - lo.y) * 0.5, (hi.z - lo.z) * 0.5};
  const Vec3 mid{(hi.x + lo.x) * 0.5, (hi.y + lo.y) * 0.5,
                 (hi.z + lo.z) * 0.5};
  obb.center = eig.vectors.row(0) * mid.x + eig.vectors.row(1) * mid.y +
               eig.vectors.row(2) * mid.z;

  // Keep rows ordered by descending half-extent (PCA order can disagree on
  // noisy data); restore handedness afterwards.
  int order[3] = {0, 1, 2};
  const double h[3] = {obb.half.x, obb.half.y, obb.half.z};
  std::sort(order, order + 3, [&](int i, int j) { return h[i] > h[j]; });
  if (order[0] != 0 || order[1] != 1) {
    Mat3 axes;
    for (int i = 0; i < 3; ++i) axes.set_row(i, obb.axes.row(order[i]));
    if (axes.det() < 0.0) axes.set_row(2, -axes.row(2));
    obb.axes = axes;
    obb.half = {h[order[0]], h[order[1]], h[order[2]]};
  }
  return obb;
}

}  // namespace stableplace::geom
