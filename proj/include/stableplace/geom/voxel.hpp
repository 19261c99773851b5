#pragma once

#include "stableplace/geom/types.hpp"

namespace stableplace::geom {

// Voxel-grid downsample: one centroid per occupied cell of an axis-aligned
// grid anchored at the origin (cell = floor(p / voxel)). Output order is
// first occurrence of each cell, so equal inputs give equal outputs. Scores
// average within a cell; labels take the majority (lowest label on ties).
PointCloud voxel_downsample(const PointCloud& cloud, double voxel);

}  // namespace stableplace::geom
