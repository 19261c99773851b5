#include "stableplace/annotate/annotate.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "json.hpp"
#include "stableplace/error.hpp"
#include "stableplace/version.hpp"

namespace stableplace::annotate {

using settle::SettleBody;
using settle::SettleOutcome;
using settle::SettleParams;
using settle::TableConfig;

void ClusterParams::validate() const {
  if (!(eps_deg > 0.0) || eps_deg >= 180.0)
    fail(ErrorKind::ValidationError, "cluster.eps_deg must be in (0, 180)");
  if (min_pts < 1)
    fail(ErrorKind::ValidationError, "cluster.min_pts must be at least 1");
}

void AnnotateParams::validate() const {
  settle.validate();
  cluster.validate();
  if (!(band > 0.0) || band > 1.0)
    fail(ErrorKind::ValidationError, "annotate.band must be in (0, 1]");
  if (tilt_deg < 0.0 || tilt_deg > 45.0)
    fail(ErrorKind::ValidationError, "annotate.tilt_deg must be in [0, 45]");
  if (subdivisions < 1)
    fail(ErrorKind::ValidationError, "annotate.subdivisions must be at least 1");
}

std::vector<DirectionCluster> cluster_resting_directions(
    const std::vector<SettleOutcome>& outcomes, double eps_deg, int min_pts) {
  ClusterParams{eps_deg, min_pts}.validate();
  const std::size_t n = outcomes.size();
  std::vector<Vec3> dirs(n);
  for (std::size_t i = 0; i < n; ++i)
    dirs[i] = geom::normalized(outcomes[i].pose.R.transposed() *
                               Vec3{0.0, 0.0, -1.0});
  const double eps = geom::deg_to_rad(eps_deg);
  auto neighbors = [&](std::size_t i) {
    std::vector<int> out;
    for (std::size_t j = 0; j < n; ++j)
      if (geom::angle_between(dirs[i], dirs[j]) <= eps)
        out.push_back(static_cast<int>(j));
    return out;
  };

  // Textbook DBSCAN, deterministic: seeds and queue expand in index order.
  constexpr int kUnvisited = -2, kNoise = -1;
  std::vector<int> label(n, kUnvisited);
  int next_cluster = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (label[i] != kUnvisited) continue;
    std::vector<int> nb = neighbors(i);
    if (static_cast<int>(nb.size()) < min_pts) {
      label[i] = kNoise;
      continue;
    }
    const int cid = next_cluster++;
    label[i] = cid;
    std::deque<int> queue(nb.begin(), nb.end());
    while (!queue.empty()) {
      const int j = queue.front();
      queue.pop_front();
      if (label[j] == kNoise) label[j] = cid;  // border point
      if (label[j] != kUnvisited) continue;
      label[j] = cid;
      std::vector<int> nb2 = neighbors(static_cast<std::size_t>(j));
      if (static_cast<int>(nb2.size()) >= min_pts)
        queue.insert(queue.end(), nb2.begin(), nb2.end());
    }
  }

  std::vector<DirectionCluster> clusters(static_cast<std::size_t>(next_cluster));
  for (std::size_t i = 0; i < n; ++i) {
    if (label[i] < 0) continue;
    clusters[static_cast<std::size_t>(label[i])].members.push_back(
        static_cast<int>(i));
  }
  for (DirectionCluster& c : clusters) {
    Vec3 mean{0, 0, 0};
    for (int m : c.members) mean = mean + dirs[static_cast<std::size_t>(m)];
    c.direction = geom::normalized(mean);
  }
  return clusters;
}

std::vector<int> extract_support_mask(const TriMesh& mesh,
                                      const Vec3& direction, double band) {
  mesh.validate();
  if (std::abs(geom::norm(direction) - 1.0) > 1e-9)
    fail(ErrorKind::ValidationError, "support direction must be unit length");
  if (!(band > 0.0) || band > 1.0)
    fail(ErrorKind::ValidationError, "support band must be in (0, 1]");
  // With `direction` pointing straight down, a vertex's height above the
  // table grows along -direction.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const Vec3& v : mesh.vertices) {
    const double h = -dot(v, direction);
    lo = std::min(lo, h);
    hi = std::max(hi, h);
  }
  if (hi - lo < 1e-12)
    fail(ErrorKind::DegenerateInput,
         "object has no extent along the support direction");
  const double cut = lo + band * (hi - lo);
  std::vector<int> mask;
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i)
    if (-dot(mesh.vertices[i], direction) <= cut)
      mask.push_back(static_cast<int>(i));
  return mask;
}

bool tilt_verify(const SettleBody& body, const Vec3& direction,
                 const SettleParams& params, double tilt_deg, double eps_deg) {
  params.validate();
  const double eps = geom::deg_to_rad(eps_deg);
  for (int k = 0; k < 8; ++k) {
    const TableConfig table = TableConfig::tilted(tilt_deg, k * 45.0);
    RigidPose start;
    start.R = geom::rotation_between(direction, table.normal * -1.0);
    start.T = table.normal * (0.25 * body.bounding_radius());
    const auto [outcome, trace] = settle::run_settle(body, start, table, params);
    if (!trace.converged || outcome.instability >= params.epsilon2) return false;
    const Vec3 down =
        geom::normalized(outcome.pose.R.transposed() * (table.normal * -1.0));
    if (geom::angle_between(down, direction) > eps) return false;
  }
  return true;
}

bool tilt_verify(const TriMesh& mesh, const StablePlane& plane,
                 const SettleParams& params, double tilt_deg, double eps_deg) {
  return tilt_verify(SettleBody(mesh), plane.normal, params, tilt_deg, eps_deg);
}

AnnotationRecord annotate(const TriMesh& mesh, const AnnotateParams& params,
                          const std::string& object_id,
                          const std::string& mesh_path) {
  params.validate();
  const SettleBody body(mesh);
  const TableConfig flat = TableConfig::flat();

  const std::vector<SettleOutcome> outcomes = settle::drop_grid(
      body, flat, params.settle, params.subdivisions, params.threads);
  std::vector<SettleOutcome> stable;
  for (const SettleOutcome& o : outcomes)
    if (o.stable) stable.push_back(o);

  std::vector<DirectionCluster> clusters = cluster_resting_directions(
      stable, params.cluster.eps_deg, params.cluster.min_pts);
  // Big basins first; discovery order breaks ties deterministically.
  std::stable_sort(clusters.begin(), clusters.end(),
                   [](const DirectionCluster& a, const DirectionCluster& b) {
                     return a.members.size() > b.members.size();
                   });

  AnnotationRecord rec;
  rec.object_id = object_id;
  rec.mesh_path = mesh_path;
  rec.params = params;
  rec.tool_version = kToolVersion;
  for (const DirectionCluster& c : clusters) {
    // Seat the object on the candidate plane; the settled pose is the
    // plane's representative. A candidate that cannot even sit still on the
    // flat table is dropped outright.
    RigidPose start;
    start.R = geom::rotation_between(c.direction, {0.0, 0.0, -1.0});
    start.T = Vec3{0.0, 0.0, 0.25 * body.bounding_radius()};
    const auto [seated, trace] = settle::run_settle(body, start, flat, params.settle);
    if (!seated.stable || seated.resting_facet < 0) continue;
    bool moved = false;
    for (std::size_t i = 1; i < trace.movements.size(); ++i)
      if (trace.movements[i] > 1e-6) moved = true;
    if (moved) continue;
    if (!tilt_verify(body, c.direction, params.settle, params.tilt_deg,
                     params.cluster.eps_deg))
      continue;
    StablePlane plane;
    plane.normal = c.direction;
    plane.support_vertices = extract_support_mask(mesh, c.direction, params.band);
    plane.rep_pose = seated.pose;
    plane.cluster_size = static_cast<int>(c.members.size());
    plane.score =
        static_cast<double>(c.members.size()) / static_cast<double>(outcomes.size());
    rec.planes.push_back(std::move(plane));
  }
  rec.no_stable_planes = rec.planes.empty();
  return rec;
}

namespace {

nlohmann::json pose_to_json(const RigidPose& pose) {
  return {{"R", pose.R.m}, {"T", {pose.T.x, pose.T.y, pose.T.z}}};
}

RigidPose pose_from_json(const nlohmann::json& j) {
  RigidPose p;
  const auto r = j.at("R");
  if (!r.is_array() || r.size() != 9)
    fail(ErrorKind::ParseError, "pose R must be 9 reals");
  for (std::size_t i = 0; i < 9; ++i) p.R.m[i] = r[i].get<double>();
  const auto t = j.at("T");
  if (!t.is_array() || t.size() != 3)
    fail(ErrorKind::ParseError, "pose T must be 3 reals");
  p.T = {t[0].get<double>(), t[1].get<double>(), t[2].get<double>()};
  return p;
}

}  // namespace

std::string record_to_json(const AnnotationRecord& record) {
  nlohmann::json j;
  j["object_id"] = record.object_id;
  j["mesh"] = record.mesh_path;
  j["tool_version"] = record.tool_version;
  j["no_stable_planes"] = record.no_stable_planes;
  j["params"] = {
      {"settle",
       {{"epsilon", record.params.settle.epsilon},
        {"epsilon1", record.params.settle.epsilon1},
        {"epsilon2", record.params.settle.epsilon2},
        {"L", record.params.settle.window},
        {"max_steps", record.params.settle.max_steps}}},
      {"cluster",
       {{"eps_deg", record.params.cluster.eps_deg},
        {"min_pts", record.params.cluster.min_pts}}},
      {"band", record.params.band},
      {"tilt_deg", record.params.tilt_deg},
      {"subdivisions", record.params.subdivisions},
      {"seed", record.params.seed},
  };
  j["planes"] = nlohmann::json::array();
  for (const StablePlane& p : record.planes) {
    j["planes"].push_back({{"normal", {p.normal.x, p.normal.y, p.normal.z}},
                           {"support_vertices", p.support_vertices},
                           {"cluster_size", p.cluster_size},
                           {"score", p.score},
                           {"rep_pose", pose_to_json(p.rep_pose)}});
  }
  return j.dump(2) + "\n";
}

AnnotationRecord record_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("annotation json: ") + e.what());
  }
  AnnotationRecord rec;
  try {
    rec.object_id = j.at("object_id").get<std::string>();
    rec.mesh_path = j.at("mesh").get<std::string>();
    rec.tool_version = j.at("tool_version").get<std::string>();
    rec.no_stable_planes = j.at("no_stable_planes").get<bool>();
    const auto& params = j.at("params");
    const auto& s = params.at("settle");
    rec.params.settle.epsilon = s.at("epsilon").get<double>();
    rec.params.settle.epsilon1 = s.at("epsilon1").get<double>();
    rec.params.settle.epsilon2 = s.at("epsilon2").get<double>();
    rec.params.settle.window = s.at("L").get<int>();
    rec.params.settle.max_steps = s.at("max_steps").get<int>();
    const auto& c = params.at("cluster");
    rec.params.cluster.eps_deg = c.at("eps_deg").get<double>();
    rec.params.cluster.min_pts = c.at("min_pts").get<int>();
    rec.params.band = params.at("band").get<double>();
    rec.params.tilt_deg = params.at("tilt_deg").get<double>();
    rec.params.subdivisions = params.at("subdivisions").get<int>();
    rec.params.seed = params.at("seed").get<std::uint64_t>();
    for (const auto& pj : j.at("planes")) {
      StablePlane p;
      const auto& n = pj.at("normal");
      p.normal = {n[0].get<double>(), n[1].get<double>(), n[2].get<double>()};
      p.support_vertices = pj.at("support_vertices").get<std::vector<int>>();
      p.cluster_size = pj.at("cluster_size").get<int>();
      p.score = pj.at("score").get<double>();
      p.rep_pose = pose_from_json(pj.at("rep_pose"));
      rec.planes.push_back(std::move(p));
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("annotation json: ") + e.what());
  }
  return rec;
}

}  // namespace stableplace::annotate
