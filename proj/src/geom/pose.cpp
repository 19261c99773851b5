#include "stableplace/geom/pose.hpp"

#include <cmath>

namespace stableplace::geom {

double pose_delta(const RigidPose& a, const RigidPose& b) {
  double acc = 0.0;
  for (int i = 0; i < 9; ++i) {
    const double d = a.R.m[i] - b.R.m[i];
    acc += d * d;
  }
  acc += norm2(a.T - b.T);
  return std::sqrt(acc);
}

}  // namespace stableplace::geom
