#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "stableplace/annotate/annotate.hpp"
#include "stableplace/error.hpp"
#include "stableplace/geom/pose.hpp"
#include "stableplace/geom/shapes.hpp"
#include "stableplace/settle/settle.hpp"

using namespace stableplace;
using namespace stableplace::geom;
using namespace stableplace::annotate;
using settle::SettleBody;
using settle::SettleOutcome;
using settle::SettleParams;
using settle::TableConfig;

namespace {

SettleOutcome outcome_with_down(const Vec3& down) {
  // A synthetic stable outcome whose object-frame down direction is `down`.
  SettleOutcome o;
  o.pose.R = rotation_between(down, {0, 0, -1});
  o.stable = true;
  return o;
}

bool has_normal(const AnnotationRecord& rec, const Vec3& n, double tol_deg) {
  for (const StablePlane& p : rec.planes)
    if (rad_to_deg(angle_between(p.normal, n)) < tol_deg) return true;
  return false;
}

}  // namespace

TEST_CASE("direction clustering recovers the cube's six faces") {
  const SettleBody body(make_box(1.0, 1.0, 1.0));
  const auto outcomes =
      settle::drop_grid(body, TableConfig::flat(), SettleParams{}, 8, 1);
  std::vector<SettleOutcome> stable;
  for (const auto& o : outcomes)
    if (o.stable) stable.push_back(o);
  const auto clusters = cluster_resting_directions(stable, 10.0, 3);
  REQUIRE(clusters.size() == 6);
  std::size_t total = 0;
  for (const auto& c : clusters) {
    total += c.members.size();
    // Each direction is a signed coordinate axis.
    const Vec3& d = c.direction;
    const double m = std::max({std::abs(d.x), std::abs(d.y), std::abs(d.z)});
    CHECK(m == doctest::Approx(1.0).epsilon(1e-3));
  }
  CHECK(total == stable.size());  // a cube leaves no noise points
}

TEST_CASE("direction clustering edge cases") {
  CHECK(cluster_resting_directions({}, 10.0, 3).empty());

  // All outcomes share one direction: one cluster, that direction.
  std::vector<SettleOutcome> same(5, outcome_with_down({0, 0, -1}));
  const auto one = cluster_resting_directions(same, 10.0, 3);
  REQUIRE(one.size() == 1);
  CHECK(one[0].members.size() == 5);
  CHECK(norm(one[0].direction - Vec3{0, 0, -1}) < 1e-12);

  // Two directions 90 degrees apart, min_pts 3: both noise.
  std::vector<SettleOutcome> two = {outcome_with_down({0, 0, -1}),
                                    outcome_with_down({1, 0, 0})};
  CHECK(cluster_resting_directions(two, 10.0, 3).empty());

  CHECK_THROWS_AS(cluster_resting_directions(two, -1.0, 3), Error);
  CHECK_THROWS_AS(cluster_resting_directions(two, 10.0, 0), Error);
}

TEST_CASE("support mask picks the cube bottom and scales with the band") {
  const TriMesh cube = make_box(1.0, 1.0, 1.0);
  const auto mask = extract_support_mask(cube, {0, 0, -1}, 0.05);
  REQUIRE(mask.size() == 4);
  for (int vi : mask)
    CHECK(cube.vertices[static_cast<std::size_t>(vi)].z ==
          doctest::Approx(-0.5));
  CHECK(extract_support_mask(cube, {0, 0, -1}, 1.0).size() ==
        cube.vertices.size());
  // Sideways direction picks that face instead.
  const auto side = extract_support_mask(cube, {1, 0, 0}, 0.05);
  REQUIRE(side.size() == 4);
  for (int vi : side)
    CHECK(cube.vertices[static_cast<std::size_t>(vi)].x == doctest::Approx(0.5));
}

TEST_CASE("support mask on the chair catches exactly the leg tips") {
  const TriMesh chair = make_toy_chair();
  // The four legs are the first four 8-vertex shells; each one's first four
  // vertices are its bottom face.
  std::set<int> tip_ids;
  for (int leg = 0; leg < 4; ++leg)
    for (int k = 0; k < 4; ++k) tip_ids.insert(leg * 8 + k);
  const auto mask = extract_support_mask(chair, {0, 0, -1}, 0.05);
  REQUIRE(mask.size() == 16);
  for (int vi : mask) CHECK(tip_ids.count(vi) == 1);
}

TEST_CASE("support mask rejects flat objects and bad directions") {
  TriMesh cube = make_box(1.0, 1.0, 1.0);
  CHECK_THROWS_AS(extract_support_mask(cube, {0, 0, 2}, 0.05), Error);
  // Degenerate extent: collapse the cube along x, then ask for x support.
  for (Vec3& v : cube.vertices) v.x = 0.0;
  CHECK_THROWS_AS(extract_support_mask(cube, {1, 0, 0}, 0.05), Error);
}

TEST_CASE("tilt verification accepts the cube face and rejects rollers") {
  const SettleParams params;
  const SettleBody cube(make_box(1.0, 1.0, 1.0));
  CHECK(tilt_verify(cube, {0, 0, -1}, params));

  // Tall rod on its end: the 10-degree COM offset leaves the end facet.
  const SettleBody tall(make_ngon_prism(16, 0.01, 0.12));
  CHECK_FALSE(tilt_verify(tall, {0, 0, -1}, params));
  // Stubby rod stands.
  const SettleBody stubby(make_ngon_prism(16, 0.01, 0.10));
  CHECK(tilt_verify(stubby, {0, 0, -1}, params));

  // Cylinder side contact rolls for at least one azimuth.
  const SettleBody cyl(make_ngon_prism(24, 0.04, 0.08));
  const Vec3 side = normalized(Vec3{std::cos(kPi / 24), std::sin(kPi / 24), 0}) * -1.0;
  CHECK_FALSE(tilt_verify(cyl, side, params));
}

TEST_CASE("tilt verification is monotone in the tilt angle") {
  const SettleBody body(make_box(0.2, 0.1, 0.05));
  const SettleParams params;
  const Vec3 candidates[] = {{0, 0, -1}, {0, 0, 1}, {1, 0, 0},
                             {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
  for (const Vec3& v : candidates) {
    if (tilt_verify(body, v, params, 10.0)) CHECK(tilt_verify(body, v, params, 5.0));
  }
}

TEST_CASE("annotate finds all six cube planes with near-equal basins") {
  AnnotateParams params;
  const AnnotationRecord rec = annotate::annotate(make_box(1, 1, 1), params, "cube");
  REQUIRE(rec.planes.size() == 6);
  CHECK_FALSE(rec.no_stable_planes);
  int total = 0;
  for (const StablePlane& p : rec.planes) {
    CHECK(norm(p.normal) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(p.support_vertices.size() == 4);
    CHECK(p.score == doctest::Approx(p.cluster_size / 512.0));
    total += p.cluster_size;
    // Symmetry: no face basin dwarfs another.
    CHECK(p.cluster_size > 40);


    // The representative pose rests on the plane: its down direction is the
    // plane normal and it re-settles with zero movement.
    const Vec3 down = p.rep_pose.R.transposed() * Vec3{0, 0, -1};
    CHECK(rad_to_deg(angle_between(down, p.normal)) < 1.0);
    const auto [again, trace] = settle::run_settle(
        make_box(1, 1, 1), p.rep_pose, TableConfig::flat(), params.settle);
    CHECK(again.stable);
    for (double m : trace.movements) CHECK(m < 1e-9);
  }
  CHECK(total == 512);
  // Sorted by basin size.
  for (std::size_t i = 1; i < rec.planes.size(); ++i)
    CHECK(rec.planes[i - 1].cluster_size >= rec.planes[i].cluster_size);
}

TEST_CASE("annotate ranks the flat box faces above the narrow ones") {
  const AnnotationRecord rec =
      annotate::annotate(make_box(0.4, 0.2, 0.1), AnnotateParams{}, "brick");
  REQUIRE(rec.planes.size() == 6);
  // The two largest basins belong to the big 0.4 x 0.2 faces (normals +-z).
  CHECK(std::abs(rec.planes[0].normal.z) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(std::abs(rec.planes[1].normal.z) == doctest::Approx(1.0).epsilon(1e-6));
  // And the two smallest to the 0.2 x 0.1 ends (normals +-x).
  CHECK(std::abs(rec.planes[4].normal.x) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(std::abs(rec.planes[5].normal.x) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("annotate yields no planes for a sphere") {
  const AnnotationRecord rec =
      annotate::annotate(make_icosphere(0.05, 2), AnnotateParams{}, "sphere");
  CHECK(rec.planes.empty());
  CHECK(rec.no_stable_planes);
}

TEST_CASE("annotate keeps the chair's implicit leg plane") {
  const AnnotationRecord rec = annotate::annotate(make_toy_chair(), AnnotateParams{}, "chair");
  REQUIRE_FALSE(rec.planes.empty());
  CHECK(has_normal(rec, {0, 0, -1}, 1.0));
  for (const StablePlane& p : rec.planes) {
    if (rad_to_deg(angle_between(p.normal, {0, 0, -1})) >= 1.0) continue;
    // Upright support = the 16 leg-tip vertices (4 per leg).
    CHECK(p.support_vertices.size() == 16);
  }
}

TEST_CASE("annotate cup keeps bottom and rim, drops the rolling side") {
  const AnnotationRecord rec =
      annotate::annotate(make_cup(24, 0.045, 0.10, 0.006, 0.008), AnnotateParams{}, "cup");
  REQUIRE(rec.planes.size() == 2);
  CHECK(has_normal(rec, {0, 0, -1}, 1.0));  // resting on its base
  CHECK(has_normal(rec, {0, 0, 1}, 1.0));   // resting upside down on the rim
}

TEST_CASE("rotating the mesh rotates the annotated normals") {
  const Mat3 w = rot_z(0.35) * rot_x(0.2);
  TriMesh wedge = make_wedge(0.18, 0.06, 0.15);
  TriMesh turned = wedge;
  for (Vec3& v : turned.vertices) v = w * v;

  const AnnotationRecord base = annotate::annotate(wedge, AnnotateParams{}, "wedge");
  const AnnotationRecord rot = annotate::annotate(turned, AnnotateParams{}, "wedge-rot");
  REQUIRE(base.planes.size() == rot.planes.size());
  for (const StablePlane& p : base.planes) {
    const Vec3 expect = w * p.normal;
    bool found = false;
    for (const StablePlane& q : rot.planes)
      if (rad_to_deg(angle_between(q.normal, expect)) < 1.0) found = true;
    CHECK(found);
  }
}

TEST_CASE("annotation records round-trip through json losslessly") {
  AnnotateParams params;
  params.seed = 1234567;
  const AnnotationRecord rec =
      annotate::annotate(make_wedge(0.18, 0.06, 0.15), params, "wedge", "meshes/wedge.obj");
  const std::string text = record_to_json(rec);
  const AnnotationRecord back = record_from_json(text);
  CHECK(back.object_id == rec.object_id);
  CHECK(back.mesh_path == rec.mesh_path);
  CHECK(back.tool_version == rec.tool_version);
  CHECK(back.no_stable_planes == rec.no_stable_planes);
  CHECK(back.params.settle.epsilon == rec.params.settle.epsilon);
  CHECK(back.params.settle.window == rec.params.settle.window);
  CHECK(back.params.cluster.eps_deg == rec.params.cluster.eps_deg);
  CHECK(back.params.seed == rec.params.seed);
  REQUIRE(back.planes.size() == rec.planes.size());
  for (std::size_t i = 0; i < rec.planes.size(); ++i) {
    CHECK(back.planes[i].normal.x == rec.planes[i].normal.x);
    CHECK(back.planes[i].normal.y == rec.planes[i].normal.y);
    CHECK(back.planes[i].normal.z == rec.planes[i].normal.z);
    CHECK(back.planes[i].support_vertices == rec.planes[i].support_vertices);
    CHECK(back.planes[i].cluster_size == rec.planes[i].cluster_size);
    CHECK(back.planes[i].score == rec.planes[i].score);
    CHECK(pose_delta(back.planes[i].rep_pose, rec.planes[i].rep_pose) == 0.0);
  }
  CHECK_THROWS_AS(record_from_json("{not json"), Error);
  CHECK_THROWS_AS(record_from_json("{\"object_id\": 1}"), Error);
}
