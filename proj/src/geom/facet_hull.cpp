#include "stableplace/geom/facet_hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>

namespace stableplace::geom {

namespace {

// Adjacent hull triangles closer than ~1.4e-5 rad in normal are one facet.
constexpr double kCoplanarDot = 1.0 - 1e-10;

}  // namespace

int FacetHull::facet_along(const Vec3& dir) const {
  int best = -1;
  double best_dot = -2.0;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const double d = dot(facets[i].normal, dir);
    if (d > best_dot) {
      best_dot = d;
      best = static_cast<int>(i);
    }
  }
  return best;
}

double facet_interior_margin(const FacetHull& hull, int facet, const Vec3& q,
                             int* worst_edge) {
  const HullFacet& f = hull.facets[facet];
  double margin = std::numeric_limits<double>::infinity();
  int worst = 0;
  const std::size_t n = f.loop.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Vec3& a = hull.vertices[f.loop[k]];
    const Vec3& b = hull.vertices[f.loop[(k + 1) % n]];
    const Vec3 inward = normalized(cross(f.normal, b - a));
    const double d = dot(inward, q - a);
    if (d < margin) {
      margin = d;
      worst = static_cast<int>(k);
    }
  }
  if (worst_edge) *worst_edge = worst;
  return margin;
}

FacetHull build_facet_hull(const TriMesh& hull) {
  const std::size_t nf = hull.faces.size();

  // Directed edge -> owning triangle.
  std::map<std::pair<int, int>, int> edge_owner;
  for (std::size_t f = 0; f < nf; ++f)
    for (int k = 0; k < 3; ++k)
      edge_owner[{hull.faces[f][k], hull.faces[f][(k + 1) % 3]}] =
          static_cast<int>(f);

  auto tri_neighbor = [&](std::size_t f, int k) {
    const auto it = edge_owner.find(
        {hull.faces[f][(k + 1) % 3], hull.faces[f][k]});
    if (it == edge_owner.end())
      fail(ErrorKind::DegenerateInput, "hull surface is not closed");
    return it->second;
  };

  std::vector<Vec3> tri_normal(nf);
  for (std::size_t f = 0; f < nf; ++f) tri_normal[f] = hull.face_normal(f);

  // Group coplanar neighbors.
  std::vector<int> group(nf, -1);
  int group_count = 0;
  for (std::size_t f = 0; f < nf; ++f) {
    if (group[f] >= 0) continue;
    const int g = group_count++;
    std::vector<std::size_t> stack{f};
    group[f] = g;
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      for (int k = 0; k < 3; ++k) {
        const int nb = tri_neighbor(cur, k);
        if (group[nb] >= 0) continue;
        if (dot(tri_normal[cur], tri_normal[nb]) >= kCoplanarDot) {
          group[nb] = g;
          stack.push_back(static_cast<std::size_t>(nb));
        }
      }
    }
  }

  FacetHull out;
  out.vertices = hull.vertices;
  out.facets.resize(group_count);

  // Boundary edges per group, then chained into the CCW loop.
  std::vector<std::map<int, std::pair<int, int>>> boundary(group_count);
  for (std::size_t f = 0; f < nf; ++f) {
    for (int k = 0; k < 3; ++k) {
      const int nb = tri_neighbor(f, k);
      if (group[nb] == group[f]) continue;
      const int a = hull.faces[f][k];
      const int b = hull.faces[f][(k + 1) % 3];
      boundary[group[f]][a] = {b, group[nb]};
    }
  }

  for (int g = 0; g < group_count; ++g) {
    HullFacet& facet = out.facets[g];
    const auto& edges = boundary[g];
    if (edges.empty())
      fail(ErrorKind::DegenerateInput, "hull facet with empty boundary");
    // Canonical loop start: smallest vertex index (map is ordered).
    int start = edges.begin()->first;
    int cursor = start;
    do {
      const auto it = edges.find(cursor);
      if (it == edges.end())
        fail(ErrorKind::DegenerateInput, "hull facet boundary is broken");
      facet.loop.push_back(cursor);
      facet.neighbor.push_back(it->second.second);
      cursor = it->second.first;
    } while (cursor != start &&
             facet.loop.size() <= edges.size());
    if (cursor != start)
      fail(ErrorKind::DegenerateInput, "hull facet boundary is not a loop");
  }

  for (std::size_t f = 0; f < nf; ++f) {
    HullFacet& facet = out.facets[group[f]];
    const double a = hull.face_area(f);
    facet.area += a;
    facet.normal += tri_normal[f] * a;
  }
  for (HullFacet& facet : out.facets) {
    facet.normal = normalized(facet.normal);
    double acc = 0.0;
    for (int v : facet.loop) acc += dot(facet.normal, out.vertices[v]);
    facet.offset = -acc / static_cast<double>(facet.loop.size());
    out.total_area += facet.area;
  }
  return out;
}

}  // namespace stableplace::geom
