#pragma once

#include "stableplace/geom/types.hpp"

namespace stableplace::geom {

struct MassProperties {
  double volume = 0.0;
  Vec3 com;  // uniform-density center of mass
};

// True when every directed edge appears exactly once and its reverse exists:
// a closed, consistently oriented surface (disjoint closed shells count).
bool is_watertight(const TriMesh& mesh);

// Volume and uniform-density COM by signed tetrahedra against the origin.
// Throws OpenMesh when the surface is not closed and NonPositiveVolume when
// the signed volume is not positive (inverted orientation).
MassProperties mass_properties(const TriMesh& mesh);

}  // namespace stableplace::geom
