#pragma once

#include "stableplace/geom/types.hpp"

namespace stableplace::geom {

// Eigen-decomposition of a symmetric 3x3 matrix by cyclic Jacobi sweeps.
// Eigenvalues come back descending with matching unit eigenvectors (rows of
// `vectors`), right-handed.
struct SymEigen3 {
  Vec3 values;
  Mat3 vectors;
};
SymEigen3 sym_eigen3(const Mat3& sym);

// PCA-fitted oriented bounding box. Axes are the covariance eigenvectors of
// the convex-hull vertices (so interior sampling density cannot skew them);
// half-extents come from projecting the full cloud. Throws DegenerateInput
// for fewer than 4 points or a degenerate (flat/collinear) set.
ObbModel pca_obb(const PointCloud& cloud);

}  // namespace stableplace::geom
