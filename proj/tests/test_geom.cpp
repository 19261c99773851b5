#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <set>

#include "doctest.h"
#include "stableplace/error.hpp"
#include "stableplace/geom/convex_hull.hpp"
#include "stableplace/geom/facet_hull.hpp"
#include "stableplace/geom/io.hpp"
#include "stableplace/geom/mass_properties.hpp"
#include "stableplace/geom/obb.hpp"
#include "stableplace/geom/pose.hpp"
#include "stableplace/geom/ransac.hpp"
#include "stableplace/geom/shapes.hpp"
#include "stableplace/geom/types.hpp"
#include "stableplace/geom/voxel.hpp"
#include "stableplace/rng.hpp"

using namespace stableplace;
using namespace stableplace::geom;

namespace {

std::vector<Vec3> random_cloud(Rng& rng, std::size_t n, double scale = 1.0) {
  std::vector<Vec3> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    pts.push_back({rng.uniform(-scale, scale), rng.uniform(-scale, scale),
                   rng.uniform(-scale, scale)});
  return pts;
}

// Max signed distance of any point to the outside of any hull face plane.
double max_outside_distance(const TriMesh& hull, const std::vector<Vec3>& pts) {
  double worst = -1e300;
  for (const auto& f : hull.faces) {
    const Vec3& a = hull.vertices[static_cast<std::size_t>(f[0])];
    const Vec3 n = normalized(hull.face_normal(
        static_cast<std::size_t>(&f - hull.faces.data())));
    for (const Vec3& p : pts) worst = std::max(worst, dot(n, p - a));
  }
  return worst;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("convex hull of a cube keeps the 8 corners and unit volume") {
  std::vector<Vec3> pts;
  for (int i = 0; i < 8; ++i)
    pts.push_back({(i & 1) ? 0.5 : -0.5, (i & 2) ? 0.5 : -0.5,
                   (i & 4) ? 0.5 : -0.5});
  // Interior and duplicate points must not survive.
  pts.push_back({0.0, 0.0, 0.0});
  pts.push_back({0.25, -0.1, 0.3});
  pts.push_back({0.5, 0.5, 0.5});
  const TriMesh hull = convex_hull(pts);
  CHECK(hull.vertices.size() == 8);
  CHECK(hull.faces.size() == 12);
  CHECK(is_watertight(hull));
  const MassProperties mp = mass_properties(hull);
  CHECK(mp.volume == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(norm(mp.com) < 1e-12);
}

TEST_CASE("convex hull contains every input point") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto pts = random_cloud(rng, 60, 0.5 + trial * 0.1);
    const TriMesh hull = convex_hull(pts);
    CHECK(is_watertight(hull));
    CHECK(max_outside_distance(hull, pts) < 1e-9);
    // Idempotence: the hull of the hull vertices is the same solid.
    const TriMesh again = convex_hull(hull.vertices);
    CHECK(again.vertices.size() == hull.vertices.size());
    CHECK(mass_properties(again).volume ==
          doctest::Approx(mass_properties(hull).volume).epsilon(1e-10));
    // Every hull vertex is an input point.
    for (const Vec3& v : hull.vertices) {
      bool found = false;
      for (const Vec3& p : pts)
        if (distance(v, p) < 1e-12) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("convex hull rejects degenerate input") {
  CHECK_THROWS_AS(convex_hull(std::vector<Vec3>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}),
                  Error);
  // Coplanar grid.
  std::vector<Vec3> flat;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) flat.push_back({i * 0.1, j * 0.1, 0.0});
  CHECK_THROWS_AS(convex_hull(flat), Error);
  // Collinear.
  std::vector<Vec3> line;
  for (int i = 0; i < 8; ++i) line.push_back({i * 0.2, i * 0.1, i * 0.3});
  CHECK_THROWS_AS(convex_hull(line), Error);
}

TEST_CASE("facet hull merges the cube into 6 quads") {
  const TriMesh cube = make_box(1.0, 1.0, 1.0);
  const FacetHull fh = build_facet_hull(convex_hull(cube.vertices));
  REQUIRE(fh.facets.size() == 6);
  CHECK(fh.total_area == doctest::Approx(6.0).epsilon(1e-12));
  std::set<int> axis_hits;
  for (std::size_t i = 0; i < fh.facets.size(); ++i) {
    const HullFacet& f = fh.facets[i];
    CHECK(f.loop.size() == 4);
    CHECK(f.neighbor.size() == 4);
    CHECK(f.area == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(norm(f.normal) == doctest::Approx(1.0).epsilon(1e-12));
    // Each facet normal is a signed coordinate axis.
    for (int axis = 0; axis < 3; ++axis) {
      const double c = axis == 0 ? f.normal.x : axis == 1 ? f.normal.y : f.normal.z;
      if (std::abs(std::abs(c) - 1.0) < 1e-12)
        axis_hits.insert(axis * 2 + (c > 0 ? 1 : 0));
    }
    // Plane equation holds on the loop.
    for (int vi : f.loop)
      CHECK(std::abs(dot(f.normal, fh.vertices[static_cast<std::size_t>(vi)]) +
                     f.offset) < 1e-12);
    // Neighbors are mutual.
    for (int nb : f.neighbor) {
      REQUIRE(nb >= 0);
      REQUIRE(nb < static_cast<int>(fh.facets.size()));
      const auto& back = fh.facets[static_cast<std::size_t>(nb)].neighbor;
      CHECK(std::count(back.begin(), back.end(), static_cast<int>(i)) == 1);
    }
  }
  CHECK(axis_hits.size() == 6);
  CHECK(fh.facet_along({0, 0, 1}) ==
        fh.facet_along({0.1, -0.05, 0.9}));  // nearest facet wins
}

TEST_CASE("facet interior margin is the distance to the nearest edge") {
  const TriMesh cube = make_box(2.0, 2.0, 2.0);
  const FacetHull fh = build_facet_hull(convex_hull(cube.vertices));
  const int top = fh.facet_along({0, 0, 1});
  REQUIRE(top >= 0);
  int worst = -1;
  // Center of the top face is 1.0 from every edge.
  CHECK(facet_interior_margin(fh, top, {0, 0, 1}, &worst) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // 0.25 inside the x = +1 edge.
  CHECK(facet_interior_margin(fh, top, {0.75, 0, 1}, &worst) ==
        doctest::Approx(0.25).epsilon(1e-12));
  // Outside is negative.
  CHECK(facet_interior_margin(fh, top, {1.5, 0, 1}, &worst) ==
        doctest::Approx(-0.5).epsilon(1e-12));
  // Exactly on the edge is not inside.
  CHECK(facet_interior_margin(fh, top, {1.0, 0, 1}, &worst) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("mass properties match closed-form boxes") {
  const MassProperties box = mass_properties(make_box(0.2, 0.1, 0.05));
  CHECK(box.volume == doctest::Approx(0.001).epsilon(1e-12));
  CHECK(norm(box.com) < 1e-15);

  // Off-origin shell: COM must follow the translation.
  TriMesh shifted;
  append_shell(shifted, make_box(0.2, 0.1, 0.05), {1.0, -2.0, 3.0});
  const MassProperties sp = mass_properties(shifted);
  CHECK(sp.volume == doctest::Approx(0.001).epsilon(1e-12));
  CHECK(distance(sp.com, {1.0, -2.0, 3.0}) < 1e-12);
}

TEST_CASE("mass properties of composite shells sum exactly") {
  // L shape = foot 0.12 x 0.06 x 0.03 + upright 0.03 x 0.06 x 0.09.
  const TriMesh l = make_l_shape(0.12, 0.06, 0.03, 0.03, 0.09);
  CHECK(is_watertight(l));
  const double v_foot = 0.12 * 0.06 * 0.03;
  const double v_up = 0.03 * 0.06 * 0.09;
  const MassProperties mp = mass_properties(l);
  CHECK(mp.volume == doctest::Approx(v_foot + v_up).epsilon(1e-12));
  // Weighted COM of the two boxes, in the recentered frame (shift by
  // (-foot_x/2, 0, -total_z/2) from the corner frame).
  const Vec3 c_foot{0.12 / 2 - 0.06, 0.0, 0.03 / 2 - 0.06};
  const Vec3 c_up{0.03 / 2 - 0.06, 0.0, 0.03 + 0.09 / 2 - 0.06};
  const Vec3 expect = (c_foot * v_foot + c_up * v_up) * (1.0 / (v_foot + v_up));
  CHECK(distance(mp.com, expect) < 1e-12);
}

TEST_CASE("mass properties of a wedge match the analytic centroid") {
  // Right triangle legs b (x), h (z); centroid at 1/3 of each leg from the
  // right-angle corner, which sits at (-b/2, *, -h/2) after centering.
  const double b = 0.18, h = 0.06, l = 0.15;
  const MassProperties mp = mass_properties(make_wedge(b, h, l));
  CHECK(mp.volume == doctest::Approx(0.5 * b * h * l).epsilon(1e-12));
  CHECK(mp.com.x == doctest::Approx(-b / 2 + b / 3).epsilon(1e-12));
  CHECK(mp.com.y == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(mp.com.z == doctest::Approx(-h / 2 + h / 3).epsilon(1e-12));
}

TEST_CASE("mass properties reject open and inverted meshes") {
  TriMesh open = make_box(1, 1, 1);
  open.faces.pop_back();
  CHECK_THROWS_AS(mass_properties(open), Error);

  TriMesh inverted = make_box(1, 1, 1);
  for (auto& f : inverted.faces) std::swap(f[1], f[2]);
  CHECK_THROWS_AS(mass_properties(inverted), Error);
}

TEST_CASE("prism volume matches the n-gon area formula") {
  const int n = 24;
  const double r = 0.04, h = 0.08;
  const double area = 0.5 * n * r * r * std::sin(2 * kPi / n);
  const MassProperties mp = mass_properties(make_ngon_prism(n, r, h));
  CHECK(mp.volume == doctest::Approx(area * h).epsilon(1e-12));
  CHECK(norm(mp.com) < 1e-15);
}

TEST_CASE("pca obb recovers an axis-aligned box") {
  Rng rng(42);
  PointCloud cloud;
  // Dense surface sampling of a 0.4 x 0.2 x 0.1 box.
  const TriMesh box = make_box(0.4, 0.2, 0.1);
  cloud = surface_sample(box, 4000, rng);
  const ObbModel obb = pca_obb(cloud);
  CHECK(norm(obb.center) < 5e-3);
  CHECK(obb.half.x == doctest::Approx(0.2).epsilon(0.02));
  CHECK(obb.half.y == doctest::Approx(0.1).epsilon(0.02));
  CHECK(obb.half.z == doctest::Approx(0.05).epsilon(0.02));
  CHECK(is_rotation(obb.axes, 1e-9));
  // Longest axis should be +-x, shortest +-z.
  CHECK(std::abs(obb.axes.row(0).x) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(std::abs(obb.axes.row(2).z) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("pca obb follows a rotated box") {
  Rng rng(7);
  const Mat3 R = rot_z(0.4) * rot_x(-0.3);
  const Vec3 t{0.3, -0.1, 0.2};
  PointCloud cloud = surface_sample(make_box(0.4, 0.2, 0.1), 4000, rng);
  for (Vec3& p : cloud.points) p = R * p + t;
  const ObbModel obb = pca_obb(cloud);
  CHECK(distance(obb.center, t) < 5e-3);
  CHECK(obb.half.x == doctest::Approx(0.2).epsilon(0.02));
  CHECK(obb.half.z == doctest::Approx(0.05).epsilon(0.02));
  // Recovered major axis matches the rotated x up to sign.
  const Vec3 want = R * Vec3{1, 0, 0};
  CHECK(std::abs(dot(obb.axes.row(0), want)) ==
        doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("symmetric eigen solver matches a constructed spectrum") {
  // A = V^T diag(5, 2, 0.5) V for a known rotation V.
  const Mat3 V = rot_z(0.7) * rot_y(-0.4) * rot_x(1.1);
  Mat3 D = Mat3::identity();
  D.m[0] = 5.0;
  D.m[4] = 2.0;
  D.m[8] = 0.5;
  const Mat3 A = V.transposed() * D * V;
  const SymEigen3 eig = sym_eigen3(A);
  CHECK(eig.values.x == doctest::Approx(5.0).epsilon(1e-10));
  CHECK(eig.values.y == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(eig.values.z == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(is_rotation(eig.vectors, 1e-9));
  // Each eigenvector satisfies A v = lambda v.
  for (int i = 0; i < 3; ++i) {
    const Vec3 v = eig.vectors.row(i);
    const double lam = i == 0 ? eig.values.x : i == 1 ? eig.values.y : eig.values.z;
    CHECK(norm(A * v - v * lam) < 1e-9);
  }
}

TEST_CASE("ransac finds an exact plane among outliers") {
  Rng rng(100);
  PointCloud cloud;
  for (int i = 0; i < 200; ++i)
    cloud.points.push_back({rng.uniform(-0.1, 0.1), rng.uniform(-0.1, 0.1), 0.02});
  for (int i = 0; i < 40; ++i)
    cloud.points.push_back(
        {rng.uniform(-0.1, 0.1), rng.uniform(-0.1, 0.1), rng.uniform(0.05, 0.2)});
  const PlaneModel plane = fit_plane_ransac(cloud, 1e-6, 256, 5);
  CHECK(static_cast<int>(plane.inliers.size()) >= 200);
  CHECK(std::abs(plane.n.z) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(plane.signed_distance({0, 0, 0.02})) < 1e-9);
  // Every reported inlier is actually within tolerance.
  for (int idx : plane.inliers)
    CHECK(std::abs(plane.signed_distance(
              cloud.points[static_cast<std::size_t>(idx)])) <= plane.tolerance);
}

TEST_CASE("ransac is reproducible for a fixed seed") {
  Rng rng(3);
  PointCloud cloud;
  for (int i = 0; i < 300; ++i) {
    Vec3 p{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    if (i % 3 == 0) p.z = 0.4 * p.x - 0.2 * p.y + 0.1 + rng.uniform(-1e-4, 1e-4);
    cloud.points.push_back(p);
  }
  const PlaneModel a = fit_plane_ransac(cloud, 5e-4, 512, 77);
  const PlaneModel b = fit_plane_ransac(cloud, 5e-4, 512, 77);
  CHECK(a.n.x == b.n.x);
  CHECK(a.n.y == b.n.y);
  CHECK(a.n.z == b.n.z);
  CHECK(a.d == b.d);
  CHECK(a.inliers == b.inliers);
}

TEST_CASE("ransac error paths") {
  PointCloud two;
  two.points = {{0, 0, 0}, {1, 0, 0}};
  CHECK_THROWS_AS(fit_plane_ransac(two, 1e-3, 16, 1), Error);
  PointCloud three;
  three.points = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  CHECK_THROWS_AS(fit_plane_ransac(three, -1.0, 16, 1), Error);
}

TEST_CASE("voxel downsample merges cells and keeps first-seen order") {
  PointCloud cloud;
  cloud.points = {{0.05, 0.05, 0.05},   // cell (0,0,0)
                  {0.95, 0.05, 0.05},   // cell (9,0,0) with voxel 0.1
                  {0.07, 0.01, 0.09},   // cell (0,0,0) again
                  {-0.05, 0.05, 0.05}}; // cell (-1,0,0): negatives floor down
  cloud.scores = {1.0, 0.5, 0.0, 0.25};
  cloud.labels = {2, 3, 1, 3};
  const PointCloud down = voxel_downsample(cloud, 0.1);
  REQUIRE(down.size() == 3);
  CHECK(distance(down.points[0], {0.06, 0.03, 0.07}) < 1e-12);
  CHECK(down.scores[0] == doctest::Approx(0.5));   // mean of 1.0 and 0.0
  CHECK(down.labels[0] == 1);                      // tie 2 vs 1 -> lowest
  CHECK(distance(down.points[1], {0.95, 0.05, 0.05}) < 1e-12);
  CHECK(down.labels[2] == 3);
  CHECK_THROWS_AS(voxel_downsample(cloud, 0.0), Error);
}

TEST_CASE("pose delta matches hand-computed values and is a metric") {
  RigidPose id;
  RigidPose flipped;
  flipped.R = rot_z(kPi);
  // Rz(pi) differs from I by diag(2, 2, 0): Frobenius = sqrt(8).
  CHECK(pose_delta(id, flipped) == doctest::Approx(std::sqrt(8.0)).epsilon(1e-12));
  RigidPose moved;
  moved.T = {3.0, 4.0, 0.0};
  CHECK(pose_delta(id, moved) == doctest::Approx(5.0).epsilon(1e-12));

  Rng rng(9);
  for (int i = 0; i < 20; ++i) {
    RigidPose a, b, c;
    a.R = rot_z(rng.uniform(0, 6)) * rot_x(rng.uniform(0, 6));
    b.R = rot_y(rng.uniform(0, 6));
    c.R = rot_x(rng.uniform(0, 6)) * rot_y(rng.uniform(0, 6));
    a.T = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    b.T = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    c.T = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    CHECK(pose_delta(a, b) == doctest::Approx(pose_delta(b, a)).epsilon(1e-12));
    CHECK(pose_delta(a, c) <= pose_delta(a, b) + pose_delta(b, c) + 1e-12);
    CHECK(pose_delta(a, a) == 0.0);
  }
}

TEST_CASE("rotation helpers behave") {
  Rng rng(21);
  for (int i = 0; i < 50; ++i) {
    Vec3 f = normalized({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
    Vec3 t = normalized({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
    const Mat3 R = rotation_between(f, t);
    CHECK(is_rotation(R, 1e-9));
    CHECK(norm(R * f - t) < 1e-9);
  }
  // Antipodal case still lands on the target.
  const Mat3 R = rotation_between({0, 0, 1}, {0, 0, -1});
  CHECK(is_rotation(R, 1e-9));
  CHECK(norm(R * Vec3{0, 0, 1} - Vec3{0, 0, -1}) < 1e-9);
  // axis_angle agrees with the closed-form z rotation.
  const Mat3 a = axis_angle({0, 0, 1}, 0.83);
  const Mat3 b = rot_z(0.83);
  for (int i = 0; i < 9; ++i) CHECK(a.m[i] == doctest::Approx(b.m[i]).epsilon(1e-12));
  // rotation_angle of a known twist.
  CHECK(rotation_angle(rot_y(0.6)) == doctest::Approx(0.6).epsilon(1e-9));
  // Orthonormalization repairs small drift.
  Mat3 noisy = rot_x(0.3) * rot_z(1.2);
  noisy.m[0] += 1e-6;
  noisy.m[5] -= 2e-6;
  CHECK(is_rotation(orthonormalized(noisy), 1e-9));
}

TEST_CASE("corpus meshes are closed solids with positive volume") {
  for (const auto& [name, mesh] : desk_corpus()) {
    INFO("object ", name);
    mesh.validate();
    CHECK(is_watertight(mesh));
    CHECK(mass_properties(mesh).volume > 0.0);
  }
}

TEST_CASE("icosphere subdivision gives 320 faces and unit radius") {
  const TriMesh s = make_icosphere(0.05, 2);
  CHECK(s.faces.size() == 320);
  CHECK(is_watertight(s));
  for (const Vec3& v : s.vertices)
    CHECK(norm(v) == doctest::Approx(0.05).epsilon(1e-12));
}

TEST_CASE("cup has a bore: volume below the solid prism") {
  const TriMesh cup = make_cup(24, 0.045, 0.10, 0.006, 0.008);
  CHECK(is_watertight(cup));
  const double solid =
      mass_properties(make_ngon_prism(24, 0.045, 0.10)).volume;
  const double v = mass_properties(cup).volume;
  CHECK(v > 0.0);
  CHECK(v < 0.55 * solid);  // thin-walled, mostly hollow
}

TEST_CASE("surface samples land on the box surface") {
  Rng rng(5);
  const PointCloud cloud = surface_sample(make_box(1.0, 1.0, 1.0), 600, rng);
  REQUIRE(cloud.size() == 600);
  int per_face[3] = {0, 0, 0};
  for (const Vec3& p : cloud.points) {
    const double m = std::max({std::abs(p.x), std::abs(p.y), std::abs(p.z)});
    CHECK(m == doctest::Approx(0.5).epsilon(1e-12));
    if (std::abs(std::abs(p.x) - 0.5) < 1e-12) ++per_face[0];
    if (std::abs(std::abs(p.y) - 0.5) < 1e-12) ++per_face[1];
    if (std::abs(std::abs(p.z) - 0.5) < 1e-12) ++per_face[2];
  }
  // Equal-area faces get roughly equal shares.
  for (int axis = 0; axis < 3; ++axis) CHECK(per_face[axis] > 120);
  // Same seed, same samples.
  Rng rng2(5);
  const PointCloud rep = surface_sample(make_box(1.0, 1.0, 1.0), 600, rng2);
  CHECK(distance(rep.points[599], cloud.points[599]) == 0.0);
}

TEST_CASE("rng streams are deterministic and labeled seeds differ") {
  Rng a(1234), b(1234);
  for (int i = 0; i < 100; ++i) CHECK(a.uniform() == b.uniform());
  CHECK(mix_seed(1, "render") != mix_seed(1, "sample"));
  CHECK(mix_seed(1, "render") != mix_seed(2, "render"));
  CHECK(mix_seed(1, "render") == mix_seed(1, "render"));
  Rng c(99);
  for (int i = 0; i < 1000; ++i) {
    const double u = c.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(c.index(7) < 7);
  }
  // Box-Muller sanity: deterministic sample stats near standard normal.
  Rng d(7);
  double sum = 0.0, sq = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double x = d.normal();
    sum += x;
    sq += x * x;
  }
  CHECK(std::abs(sum / n) < 0.02);
  CHECK(sq / n == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("obj round trip preserves geometry exactly") {
  const TriMesh mesh = make_wedge(0.18, 0.06, 0.15);
  const std::string path = temp_path("sp_test_roundtrip.obj");
  save_mesh(path, mesh);
  const TriMesh back = load_mesh(path);
  REQUIRE(back.vertices.size() == mesh.vertices.size());
  REQUIRE(back.faces.size() == mesh.faces.size());
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i)
    CHECK(distance(back.vertices[i], mesh.vertices[i]) == 0.0);
  for (std::size_t i = 0; i < mesh.faces.size(); ++i)
    CHECK(back.faces[i] == mesh.faces[i]);
  std::filesystem::remove(path);
}

TEST_CASE("obj parser handles slash face forms and negative indices") {
  const std::string text =
      "# comment\n"
      "v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 0 1\n"
      "vt 0 0\nvn 0 0 1\n"
      "f 1/1/1 2/1/1 3/1/1\n"
      "f -4 -3 -1\n"
      "f 1 3 4 2\n";  // quad fans into two triangles
  const std::string path = temp_path("sp_test_forms.obj");
  atomic_write(path, text);
  const TriMesh mesh = load_mesh(path);
  CHECK(mesh.vertices.size() == 4);
  CHECK(mesh.faces.size() == 4);
  CHECK(mesh.faces[1] == std::array<int, 3>{0, 1, 3});
  CHECK(mesh.faces[2] == std::array<int, 3>{0, 2, 3});
  CHECK(mesh.faces[3] == std::array<int, 3>{0, 3, 1});
  std::filesystem::remove(path);
}

TEST_CASE("ply mesh round trip in ascii") {
  const TriMesh mesh = make_ngon_prism(6, 0.03, 0.05);
  const std::string path = temp_path("sp_test_mesh.ply");
  save_mesh(path, mesh);
  const TriMesh back = load_mesh(path);
  REQUIRE(back.vertices.size() == mesh.vertices.size());
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i)
    CHECK(distance(back.vertices[i], mesh.vertices[i]) == 0.0);
  CHECK(back.faces == mesh.faces);
  std::filesystem::remove(path);
}

TEST_CASE("ply cloud round trips scores and labels in both formats") {
  Rng rng(31);
  PointCloud cloud;
  for (int i = 0; i < 50; ++i) {
    cloud.points.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
    cloud.scores.push_back(rng.uniform());
    cloud.labels.push_back(i % 4);
  }
  for (const bool binary : {false, true}) {
    const std::string path = temp_path("sp_test_cloud.ply");
    save_cloud(path, cloud, binary);
    const PointCloud back = load_cloud(path);
    REQUIRE(back.size() == cloud.size());
    for (std::size_t i = 0; i < cloud.size(); ++i) {
      CHECK(distance(back.points[i], cloud.points[i]) == 0.0);
      CHECK(back.scores[i] == cloud.scores[i]);
      CHECK(back.labels[i] == cloud.labels[i]);
    }
    std::filesystem::remove(path);
  }
}

TEST_CASE("xyz round trip and malformed input errors") {
  PointCloud cloud;
  cloud.points = {{0.5, -1.25, 3e-7}, {1, 2, 3}};
  cloud.scores = {0.25, 1.0};
  const std::string path = temp_path("sp_test_cloud.xyz");
  save_cloud(path, cloud);
  const PointCloud back = load_cloud(path);
  REQUIRE(back.size() == 2);
  CHECK(back.points[0].z == 3e-7);
  CHECK(back.scores[1] == 1.0);
  CHECK(back.labels.empty());
  std::filesystem::remove(path);

  const std::string bad = temp_path("sp_test_bad.xyz");
  atomic_write(bad, "1 2\n");
  CHECK_THROWS_AS(load_cloud(bad), Error);
  atomic_write(bad, "1 2 zebra\n");
  CHECK_THROWS_AS(load_cloud(bad), Error);
  std::filesystem::remove(bad);
  CHECK_THROWS_AS(load_cloud(temp_path("sp_does_not_exist.xyz")), Error);
}
