#include "stableplace/geom/mass_properties.hpp"

#include <map>
#include <utility>

namespace stableplace::geom {

bool is_watertight(const TriMesh& mesh) {
  std::map<std::pair<int, int>, int> count;
  for (const auto& f : mesh.faces) {
    for (int k = 0; k < 3; ++k) {
      const int a = f[k], b = f[(k + 1) % 3];
      if (a == b) return false;
      if (++count[{a, b}] > 1) return false;  // repeated directed edge
    }
  }
  for (const auto& [edge, c] : count) {
    const auto rev = count.find({edge.second, edge.first});
    if (rev == count.end()) return false;  // boundary edge
  }
  return true;
}

MassProperties mass_properties(const TriMesh& mesh) {
  mesh.validate();
  if (mesh.faces.empty())
    fail(ErrorKind::OpenMesh, "mesh has no faces");
  if (!is_watertight(mesh))
    fail(ErrorKind::OpenMesh, "mesh is not closed and consistently oriented");

  // Signed tetrahedra from the origin; each contributes det/6 volume with
  // centroid at the average of its four corners (one of which is the origin).
  double vol6 = 0.0;
  Vec3 moment;  // integral of position, times 24
  for (const auto& f : mesh.faces) {
    const Vec3& a = mesh.vertices[f[0]];
    const Vec3& b = mesh.vertices[f[1]];
    const Vec3& c = mesh.vertices[f[2]];
    const double det = dot(a, cross(b, c));
    vol6 += det;
    moment += (a + b + c) * det;
  }
  const double volume = vol6 / 6.0;
  if (volume <= 0.0)
    fail(ErrorKind::NonPositiveVolume, "signed volume is not positive");
  MassProperties mp;
  mp.volume = volume;
  mp.com = moment / (4.0 * vol6);
  return mp;
}

}  // namespace stableplace::geom
