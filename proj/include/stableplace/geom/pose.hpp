#pragma once

#include "stableplace/geom/types.hpp"

namespace stableplace::geom {

// Movement magnitude between two poses: Frobenius norm of the stacked
// [R | T] difference, rotation entries dimensionless and translation in
// meters. This is a metric on poses (it inherits the triangle inequality
// from the matrix norm).
double pose_delta(const RigidPose& a, const RigidPose& b);

}  // namespace stableplace::geom
