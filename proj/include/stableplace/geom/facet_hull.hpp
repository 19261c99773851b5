#pragma once

#include <vector>

#include "stableplace/geom/types.hpp"

namespace stableplace::geom {

// One maximal planar region of a convex hull: a convex polygon given as an
// ordered CCW vertex loop (seen from outside), with the facet across each
// boundary edge.
struct HullFacet {
  Vec3 normal;                 // unit, outward
  double offset = 0.0;         // plane: normal . x + offset = 0
  double area = 0.0;
  std::vector<int> loop;       // vertex indices, CCW
  std::vector<int> neighbor;   // facet across edge (loop[k], loop[k+1])
};

// Convex hull with coplanar triangles merged into polygonal facets. The
// settling and topple-graph logic needs real faces (a cube has 6, not 12):
// with split triangles a COM projection can land exactly on an internal
// diagonal and the on-edge-counts-as-outside rule would ping-pong.
struct FacetHull {
  std::vector<Point3> vertices;   // hull vertices (shared with the TriMesh)
  std::vector<HullFacet> facets;
  double total_area = 0.0;

  // Index of the facet whose plane supports the hull in direction `dir`
  // (outward normal closest to dir), or -1 when empty.
  int facet_along(const Vec3& dir) const;
};

// Merges coplanar adjacent triangles of a hull mesh. The mesh must be a
// valid closed convex surface (as produced by convex_hull).
FacetHull build_facet_hull(const TriMesh& hull);

// Signed distance of q from the polygon edges of facet f, measured in the
// facet plane: the minimum over edges of the inward-pointing edge-normal
// distance. Positive = strictly inside. Also reports the most violated edge.
double facet_interior_margin(const FacetHull& hull, int facet, const Vec3& q,
                             int* worst_edge);

}  // namespace stableplace::geom
