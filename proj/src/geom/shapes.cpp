#include "stableplace/geom/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "stableplace/error.hpp"

namespace stableplace::geom {

namespace {

void push_quad(TriMesh& m, int a, int b, int c, int d) {
  m.faces.push_back({a, b, c});
  m.faces.push_back({a, c, d});
}

}  // namespace

TriMesh make_box(double dx, double dy, double dz) {
  if (dx <= 0.0 || dy <= 0.0 || dz <= 0.0)
    fail(ErrorKind::DegenerateInput, "box extents must be positive");
  const double x = dx / 2.0, y = dy / 2.0, z = dz / 2.0;
  TriMesh m;
  m.vertices = {{-x, -y, -z}, {x, -y, -z}, {x, y, -z}, {-x, y, -z},
                {-x, -y, z},  {x, -y, z},  {x, y, z},  {-x, y, z}};
  push_quad(m, 0, 3, 2, 1);  // bottom, -z
  push_quad(m, 4, 5, 6, 7);  // top, +z
  push_quad(m, 0, 1, 5, 4);  // -y
  push_quad(m, 2, 3, 7, 6);  // +y
  push_quad(m, 3, 0, 4, 7);  // -x
  push_quad(m, 1, 2, 6, 5);  // +x
  return m;
}

TriMesh make_ngon_prism(int n, double r, double h) {
  if (n < 3) fail(ErrorKind::DegenerateInput, "prism needs at least 3 sides");
  if (r <= 0.0 || h <= 0.0)
    fail(ErrorKind::DegenerateInput, "prism radius and height must be positive");
  TriMesh m;
  m.vertices.reserve(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * kPi * k / n;
    m.vertices.push_back({r * std::cos(a), r * std::sin(a), -h / 2.0});
  }
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * kPi * k / n;
    m.vertices.push_back({r * std::cos(a), r * std::sin(a), h / 2.0});
  }
  for (int k = 0; k < n; ++k) {
    const int k1 = (k + 1) % n;
    push_quad(m, k, k1, n + k1, n + k);  // side, radially outward
  }
  for (int k = 1; k + 1 < n; ++k) {
    m.faces.push_back({0, k + 1, k});          // bottom fan, -z
    m.faces.push_back({n, n + k, n + k + 1});  // top fan, +z
  }
  return m;
}

TriMesh make_wedge(double base, double height, double length) {
  if (base <= 0.0 || height <= 0.0 || length <= 0.0)
    fail(ErrorKind::DegenerateInput, "wedge extents must be positive");
  const double x = base / 2.0, y = length / 2.0, z = height / 2.0;
  TriMesh m;
  // Triangle (right angle at -x,-z) extruded along y.
  m.vertices = {{-x, -y, -z}, {x, -y, -z}, {-x, -y, z},
                {-x, y, -z},  {x, y, -z},  {-x, y, z}};
  m.faces.push_back({0, 1, 2});  // -y cap
  m.faces.push_back({3, 5, 4});  // +y cap
  push_quad(m, 0, 3, 4, 1);      // bottom, -z
  push_quad(m, 0, 2, 5, 3);      // -x
  push_quad(m, 1, 4, 5, 2);      // slant, +x/+z
  return m;
}

void append_shell(TriMesh& dst, const TriMesh& src, const Vec3& offset) {
  const int base = static_cast<int>(dst.vertices.size());
  for (const Vec3& v : src.vertices) dst.vertices.push_back(v + offset);
  for (const auto& f : src.faces)
    dst.faces.push_back({f[0] + base, f[1] + base, f[2] + base});
}

TriMesh make_l_shape(double foot_x, double depth, double foot_z,
                     double upright_x, double upright_z) {
  if (upright_x >= foot_x)
    fail(ErrorKind::DegenerateInput, "upright must be narrower than the foot");
  TriMesh m;
  // Foot spans x in [0, foot_x]; the upright sits on its -x end. Recentered
  // on the combined bounding box below.
  append_shell(m, make_box(foot_x, depth, foot_z),
               {foot_x / 2.0, 0.0, foot_z / 2.0});
  append_shell(m, make_box(upright_x, depth, upright_z),
               {upright_x / 2.0, 0.0, foot_z + upright_z / 2.0});
  const Vec3 shift{-foot_x / 2.0, 0.0, -(foot_z + upright_z) / 2.0};
  for (Vec3& v : m.vertices) v = v + shift;
  return m;
}

TriMesh make_t_block(double bar_x, double depth, double bar_z, double stem_x,
                     double stem_z) {
  if (stem_x >= bar_x)
    fail(ErrorKind::DegenerateInput, "stem must be narrower than the bar");
  TriMesh m;
  // Stem below, bar on top; both centered on the z axis.
  append_shell(m, make_box(stem_x, depth, stem_z), {0.0, 0.0, stem_z / 2.0});
  append_shell(m, make_box(bar_x, depth, bar_z),
               {0.0, 0.0, stem_z + bar_z / 2.0});
  const Vec3 shift{0.0, 0.0, -(stem_z + bar_z) / 2.0};
  for (Vec3& v : m.vertices) v = v + shift;
  return m;
}

TriMesh make_toy_chair() {
  // Centimeter-scale doll chair. Legs are separate shells, so the upright
  // resting plane exists only through the four tip contacts, never as a
  // single mesh face.
  const double leg = 0.012, leg_h = 0.05;
  const double seat_x = 0.07, seat_y = 0.07, seat_z = 0.012;
  const double back_z = 0.06, back_y = 0.012;
  TriMesh m;
  const double ox = seat_x / 2.0 - leg / 2.0;
  const double oy = seat_y / 2.0 - leg / 2.0;
  for (const double sx : {-1.0, 1.0})
    for (const double sy : {-1.0, 1.0})
      append_shell(m, make_box(leg, leg, leg_h),
                   {sx * ox, sy * oy, leg_h / 2.0});
  append_shell(m, make_box(seat_x, seat_y, seat_z),
               {0.0, 0.0, leg_h + seat_z / 2.0});
  append_shell(m, make_box(seat_x, back_y, back_z),
               {0.0, (seat_y - back_y) / 2.0, leg_h + seat_z + back_z / 2.0});
  const double total_z = leg_h + seat_z + back_z;
  for (Vec3& v : m.vertices) v.z -= total_z / 2.0;
  return m;
}

TriMesh make_cup(int n, double r, double h, double wall, double bottom) {
  if (n < 3) fail(ErrorKind::DegenerateInput, "cup needs at least 3 sides");
  if (r <= 0.0 || h <= 0.0)
    fail(ErrorKind::DegenerateInput, "cup radius and height must be positive");
  if (wall <= 0.0 || wall >= r)
    fail(ErrorKind::DegenerateInput, "cup wall must be in (0, r)");
  if (bottom <= 0.0 || bottom >= h)
    fail(ErrorKind::DegenerateInput, "cup bottom must be in (0, h)");
  const double ri = r - wall;
  const double z0 = -h / 2.0, z1 = h / 2.0, zb = z0 + bottom;
  TriMesh m;
  m.vertices.reserve(static_cast<std::size_t>(4 * n));
  // Rings: outer bottom [0,n), outer top [n,2n), inner top [2n,3n),
  // inner bore floor [3n,4n).
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * kPi * k / n;
    m.vertices.push_back({r * std::cos(a), r * std::sin(a), z0});
  }
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * kPi * k / n;
    m.vertices.push_back({r * std::cos(a), r * std::sin(a), z1});
  }
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * kPi * k / n;
    m.vertices.push_back({ri * std::cos(a), ri * std::sin(a), z1});
  }
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * kPi * k / n;
    m.vertices.push_back({ri * std::cos(a), ri * std::sin(a), zb});
  }
  const int OB = 0, OT = n, IT = 2 * n, IB = 3 * n;
  for (int k = 0; k < n; ++k) {
    const int k1 = (k + 1) % n;
    push_quad(m, OB + k, OB + k1, OT + k1, OT + k);  // outer wall, outward
    push_quad(m, OT + k, OT + k1, IT + k1, IT + k);  // rim ring, +z
    push_quad(m, IT + k, IT + k1, IB + k1, IB + k);  // bore wall, inward
  }
  for (int k = 1; k + 1 < n; ++k) {
    m.faces.push_back({OB, OB + k + 1, OB + k});  // base disk, -z
    m.faces.push_back({IB, IB + k, IB + k + 1});  // bore floor, +z
  }
  return m;
}

TriMesh make_icosphere(double r, int subdiv) {
  if (r <= 0.0) fail(ErrorKind::DegenerateInput, "sphere radius must be positive");
  if (subdiv < 0 || subdiv > 6)
    fail(ErrorKind::DegenerateInput, "sphere subdivision must be in [0, 6]");
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  TriMesh m;
  m.vertices = {{-1, t, 0}, {1, t, 0},  {-1, -t, 0}, {1, -t, 0},
                {0, -1, t}, {0, 1, t},  {0, -1, -t}, {0, 1, -t},
                {t, 0, -1}, {t, 0, 1},  {-t, 0, -1}, {-t, 0, 1}};
  for (Vec3& v : m.vertices) v = normalized(v) * r;
  m.faces = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
             {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
             {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
             {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (int round = 0; round < subdiv; ++round) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      const int idx = static_cast<int>(m.vertices.size());
      m.vertices.push_back(normalized(m.vertices[static_cast<std::size_t>(a)] +
                                      m.vertices[static_cast<std::size_t>(b)]) *
                           r);
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(m.faces.size() * 4);
    for (const auto& f : m.faces) {
      const int ab = mid(f[0], f[1]), bc = mid(f[1], f[2]), ca = mid(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    m.faces = std::move(next);
  }
  return m;
}

PointCloud surface_sample(const TriMesh& mesh, std::size_t n, Rng& rng) {
  mesh.validate();
  std::vector<double> cum(mesh.faces.size());
  double total = 0.0;
  for (std::size_t i = 0; i < mesh.faces.size(); ++i) {
    total += mesh.face_area(i);
    cum[i] = total;
  }
  if (total <= 0.0) fail(ErrorKind::DegenerateInput, "mesh has no surface area");
  PointCloud cloud;
  cloud.points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double pick = rng.uniform(0.0, total);
    const auto it = std::upper_bound(cum.begin(), cum.end(), pick);
    const std::size_t fi = std::min(
        static_cast<std::size_t>(it - cum.begin()), mesh.faces.size() - 1);
    const auto& f = mesh.faces[fi];
    const Vec3& a = mesh.vertices[static_cast<std::size_t>(f[0])];
    const Vec3& b = mesh.vertices[static_cast<std::size_t>(f[1])];
    const Vec3& c = mesh.vertices[static_cast<std::size_t>(f[2])];
    double u = rng.uniform(), v = rng.uniform();
    if (u + v > 1.0) {
      u = 1.0 - u;
      v = 1.0 - v;
    }
    cloud.points.push_back(a + (b - a) * u + (c - a) * v);
  }
  return cloud;
}

std::vector<std::pair<std::string, TriMesh>> desk_corpus() {
  std::vector<std::pair<std::string, TriMesh>> out;
  out.emplace_back("box", make_box(0.20, 0.10, 0.05));
  out.emplace_back("wedge", make_wedge(0.18, 0.06, 0.15));
  out.emplace_back("l_shape", make_l_shape(0.12, 0.06, 0.03, 0.03, 0.09));
  out.emplace_back("toy_chair", make_toy_chair());
  out.emplace_back("cylinder", make_ngon_prism(24, 0.04, 0.08));
  out.emplace_back("rod", make_ngon_prism(16, 0.01, 0.12));
  out.emplace_back("cup", make_cup(24, 0.045, 0.10, 0.006, 0.008));
  out.emplace_back("t_block", make_t_block(0.12, 0.05, 0.03, 0.04, 0.07));
  out.emplace_back("ramp", make_wedge(0.12, 0.06, 0.10));
  out.emplace_back("plate", make_ngon_prism(24, 0.09, 0.012));
  return out;
}

}  // namespace stableplace::geom
