#pragma once

#include <cstdint>

#include "stableplace/geom/types.hpp"
#include "stableplace/rng.hpp"

namespace stableplace::geom {

// Closed triangle meshes with exact coordinates (coplanar faces merge
// cleanly) and outward CCW orientation. All dimensions in meters; shapes are
// centered on the origin unless noted.

// Axis-aligned box with full extents (dx, dy, dz).
TriMesh make_box(double dx, double dy, double dz);

// Regular n-gon prism, axis +z, circumradius r, height h. Models cylinders,
// rods, and plates: rolls on a tilted table once the facet half-angle
// (180/n degrees) is below the tilt.
TriMesh make_ngon_prism(int n, double r, double h);

// Right-triangular prism; cross-section legs `base` (x) by `height` (z),
// extruded `length` along y. The slanted face looks +x/+z.
TriMesh make_wedge(double base, double height, double length);

// Two abutting box shells forming an L (foot plus upright).
TriMesh make_l_shape(double foot_x, double depth, double foot_z,
                     double upright_x, double upright_z);

// Stem plus crossbar.
TriMesh make_t_block(double bar_x, double depth, double bar_z,
                     double stem_x, double stem_z);

// Seat slab, four legs, and a back rest: stable planes that are not mesh
// faces (the leg tips span the ground plane).
TriMesh make_toy_chair();

// Open cup: outer wall, rim ring, blind bore. Stable on bottom and rim.
TriMesh make_cup(int n, double r, double h, double wall, double bottom);

// Icosphere with `subdiv` subdivision rounds (2 -> 320 faces).
TriMesh make_icosphere(double r, int subdiv);

// Appends `src` (as an independent shell) translated by `offset`.
void append_shell(TriMesh& dst, const TriMesh& src, const Vec3& offset);

// Area-uniform surface sampling.
PointCloud surface_sample(const TriMesh& mesh, std::size_t n, Rng& rng);

// The ten-object desk corpus used by the benchmark tests, id -> mesh.
std::vector<std::pair<std::string, TriMesh>> desk_corpus();

}  // namespace stableplace::geom
