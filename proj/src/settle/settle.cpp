#include "stableplace/settle/settle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "json.hpp"
#include "stableplace/error.hpp"
#include "stableplace/geom/convex_hull.hpp"
#include "stableplace/geom/mass_properties.hpp"
#include "stableplace/geom/pose.hpp"
#include "stableplace/parallel.hpp"

namespace stableplace::settle {

using geom::kPi;
using geom::Mat3;

namespace {

// Hull vertices within this height of the table plane count as touching.
constexpr double kContactTol = 1e-9;
// The projected COM must clear every support edge by this much to rest;
// exactly on an edge counts as outside, so ties break deterministically.
constexpr double kInsideMargin = 1e-9;
// Torque magnitudes below this are treated as balanced.
constexpr double kBalancedTol = 1e-12;
// Pivot roots below this angle are rounding noise from contact vertices.
constexpr double kMinPivot = 1e-9;

// Settling runs in the table frame: the plane is z = 0 and gravity is a
// tilted unit vector. Movement magnitudes are frame-invariant (pose_delta
// only sees differences), so the trace can be recorded either side.
struct Frame {
  Mat3 Q;        // world -> table rotation (table normal to +z)
  Vec3 gravity;  // unit, z < 0
};

Frame make_frame(const TableConfig& table) {
  table.validate();
  Frame f;
  f.Q = geom::rotation_between(table.normal, {0.0, 0.0, 1.0});
  f.gravity = f.Q * Vec3{0.0, 0.0, -1.0};
  return f;
}

RigidPose to_table(const Frame& f, const RigidPose& world) {
  return {f.Q * world.R, f.Q * world.T};
}

RigidPose to_world(const Frame& f, const RigidPose& table) {
  const Mat3 Qt = f.Q.transposed();
  return {Qt * table.R, Qt * table.T};
}

void snap_to_table(const std::vector<Vec3>& verts_body, RigidPose& pose) {
  double zmin = std::numeric_limits<double>::infinity();
  for (const Vec3& v : verts_body) zmin = std::min(zmin, (pose.apply(v)).z);
  pose.T.z -= zmin;
}

double cross2(const Vec3& a, const Vec3& b) { return a.x * b.y - a.y * b.x; }

// 2D convex hull (monotone chain) of the contact set, CCW seen from +z.
// Collinear and duplicate points drop out, so 2 survivors mean a line
// contact and 1 a point contact. Sorting includes the index, so equal
// inputs give equal hulls.
std::vector<int> support_polygon(const std::vector<Vec3>& verts,
                                 std::vector<int> ids) {
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    const Vec3& p = verts[static_cast<std::size_t>(a)];
    const Vec3& q = verts[static_cast<std::size_t>(b)];
    if (p.x != q.x) return p.x < q.x;
    if (p.y != q.y) return p.y < q.y;
    return a < b;
  });
  std::vector<int> uniq;
  for (int id : ids) {
    if (!uniq.empty()) {
      const Vec3& p = verts[static_cast<std::size_t>(uniq.back())];
      const Vec3& q = verts[static_cast<std::size_t>(id)];
      if (std::abs(p.x - q.x) < 1e-12 && std::abs(p.y - q.y) < 1e-12) continue;
    }
    uniq.push_back(id);
  }
  if (uniq.size() <= 2) return uniq;
  auto build = [&](auto begin, auto end) {
    std::vector<int> chain;
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2) {
        const Vec3& a = verts[static_cast<std::size_t>(chain[chain.size() - 2])];
        const Vec3& b = verts[static_cast<std::size_t>(chain.back())];
        const Vec3& c = verts[static_cast<std::size_t>(*it)];
        if (cross2(b - a, c - b) <= 0.0)
          chain.pop_back();
        else
          break;
      }
      chain.push_back(*it);
    }
    return chain;
  };
  std::vector<int> lower = build(uniq.begin(), uniq.end());
  std::vector<int> upper = build(uniq.rbegin(), uniq.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

// Minimum inward edge distance of point p over the CCW polygon; positive
// inside. Reports the least-margin edge (lowest index on exact ties).
double polygon_margin(const std::vector<Vec3>& verts,
                      const std::vector<int>& poly, const Vec3& p,
                      int* worst_edge) {
  double best = std::numeric_limits<double>::infinity();
  *worst_edge = -1;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec3& a = verts[static_cast<std::size_t>(poly[i])];
    const Vec3& b = verts[static_cast<std::size_t>(poly[(i + 1) % poly.size()])];
    const Vec3 e = b - a;
    const double len = std::hypot(e.x, e.y);
    if (len < 1e-15) continue;
    const double d = cross2(e, p - a) / len;
    if (d < best) {
      best = d;
      *worst_edge = static_cast<int>(i);
    }
  }
  return best;
}

// Axis through `a` along the a->b edge, signed so that rotating by a
// positive angle releases potential energy (gravity torque positive about
// the axis). A balanced torque still topples, in the +e direction.
Vec3 edge_axis(const Vec3& a, const Vec3& b, const Vec3& com, const Vec3& g) {
  const Vec3 e = geom::normalized(b - a);
  const double s = dot(cross(com - a, g), e);
  if (s >= -kBalancedTol) return e;
  return e * -1.0;
}

// Point contact: the free axis is the gravity torque direction itself. A
// COM balanced exactly over the contact tips about a fixed fallback axis.
Vec3 vertex_axis(const Vec3& c, const Vec3& com, const Vec3& g) {
  Vec3 t = cross(com - c, g);
  if (geom::norm(t) < kBalancedTol) {
    t = cross(g, Vec3{1.0, 0.0, 0.0});
    if (geom::norm(t) < 1e-12) t = cross(g, Vec3{0.0, 1.0, 0.0});
  }
  return geom::normalized(t);
}

// Smallest positive rotation about the axis (point c, unit a) that brings a
// hull vertex down to z = 0. The height of a rotating vertex is
// A cos(t) + B sin(t) + C; roots come from the phase form. Vertices on the
// axis never move and current contacts sit at the t = 0 root, which the
// kMinPivot cutoff skips.
std::optional<double> next_contact_angle(const std::vector<Vec3>& verts,
                                         const Vec3& c, const Vec3& a) {
  double best = std::numeric_limits<double>::infinity();
  for (const Vec3& v : verts) {
    const Vec3 w = v - c;
    const Vec3 off = w - a * dot(a, w);
    if (geom::norm(off) < 1e-9) continue;
    const double A = w.z - dot(a, w) * a.z;
    const double B = cross(a, w).z;
    const double C = dot(a, w) * a.z + c.z;
    const double amp = std::hypot(A, B);
    if (amp < 1e-15 || amp < std::abs(C) - 1e-15) continue;
    const double alpha = std::acos(std::clamp(-C / amp, -1.0, 1.0));
    const double phi = std::atan2(B, A);
    for (const double base : {phi - alpha, phi + alpha}) {
      for (int k = -1; k <= 1; ++k) {
        const double t = base + 2.0 * kPi * k;
        if (t > kMinPivot && t < best) best = t;
      }
    }
  }
  if (!std::isfinite(best)) return std::nullopt;
  return best;
}

struct ContactState {
  bool resting = false;
  int facet = -1;    // resting only
  Vec3 pivot_point;  // toppling only, on the table plane
  Vec3 pivot_axis;
};

ContactState analyze(const SettleBody& body, const Frame& f,
                     const RigidPose& pose, const std::vector<Vec3>& verts) {
  std::vector<int> contacts;
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (verts[i].z <= kContactTol) contacts.push_back(static_cast<int>(i));
  const Vec3 com = pose.apply(body.com());
  const Vec3 g = f.gravity;
  ContactState st;
  const std::vector<int> poly = support_polygon(verts, std::move(contacts));
  if (poly.size() >= 3) {
    // Project the COM along gravity onto the table plane.
    const Vec3 proj = com + g * (com.z / -g.z);
    int worst = -1;
    const double margin = polygon_margin(verts, poly, proj, &worst);
    if (margin > kInsideMargin) {
      st.resting = true;
      st.facet = body.hull().facet_along(pose.R.transposed() * Vec3{0, 0, -1});
      return st;
    }
    const Vec3& a = verts[static_cast<std::size_t>(poly[static_cast<std::size_t>(worst)])];
    const Vec3& b = verts[static_cast<std::size_t>(
        poly[(static_cast<std::size_t>(worst) + 1) % poly.size()])];
    st.pivot_point = {a.x, a.y, 0.0};
    st.pivot_axis = edge_axis(st.pivot_point, {b.x, b.y, 0.0}, com, g);
    return st;
  }
  if (poly.size() == 2) {
    const Vec3& a = verts[static_cast<std::size_t>(poly[0])];
    const Vec3& b = verts[static_cast<std::size_t>(poly[1])];
    st.pivot_point = {a.x, a.y, 0.0};
    st.pivot_axis = edge_axis(st.pivot_point, {b.x, b.y, 0.0}, com, g);
    return st;
  }
  const Vec3& c = verts[static_cast<std::size_t>(poly[0])];
  st.pivot_point = {c.x, c.y, 0.0};
  st.pivot_axis = vertex_axis(st.pivot_point, com, g);
  return st;
}

}  // namespace

TableConfig TableConfig::flat() { return TableConfig{}; }

TableConfig TableConfig::tilted(double tilt_deg, double azimuth_deg) {
  TableConfig t;
  t.tilt_deg = tilt_deg;
  const double a = geom::deg_to_rad(azimuth_deg);
  const double s = std::sin(geom::deg_to_rad(tilt_deg));
  const double c = std::cos(geom::deg_to_rad(tilt_deg));
  t.normal = {s * std::cos(a), s * std::sin(a), c};
  t.validate();
  return t;
}

void TableConfig::validate() const {
  if (tilt_deg < 0.0 || tilt_deg > 45.0)
    fail(ErrorKind::ValidationError, "table tilt must be in [0, 45] degrees");
  if (std::abs(geom::norm(normal) - 1.0) > 1e-9)
    fail(ErrorKind::ValidationError, "table normal must be unit length");
  const double ang = geom::rad_to_deg(geom::angle_between(normal, {0, 0, 1}));
  if (std::abs(ang - tilt_deg) > 1e-6)
    fail(ErrorKind::ValidationError,
         "table normal disagrees with the tilt angle");
}

void SettleParams::validate() const {
  if (!(epsilon > 0.0))
    fail(ErrorKind::ValidationError, "settle.epsilon must be positive");
  if (!(epsilon1 > 0.0))
    fail(ErrorKind::ValidationError, "settle.epsilon1 must be positive");
  if (epsilon2 < epsilon1)
    fail(ErrorKind::ValidationError,
         "settle.epsilon2 must be at least epsilon1");
  if (window < 1) fail(ErrorKind::ValidationError, "settle.L must be at least 1");
  if (max_steps < 1)
    fail(ErrorKind::ValidationError, "settle.max_steps must be at least 1");
}

double instability(const std::vector<double>& movements, int window,
                   std::size_t i) {
  if (window < 1)
    fail(ErrorKind::ValidationError, "instability window must be at least 1");
  if (i < 1 || i > movements.size())
    fail(ErrorKind::IndexOutOfRange,
         "instability step " + std::to_string(i) + " outside 1.." +
             std::to_string(movements.size()));
  const std::size_t w = static_cast<std::size_t>(window);
  const std::size_t lo = i >= w ? i - w : 0;
  double sum = 0.0;
  for (std::size_t j = lo; j < i; ++j) sum += movements[j];
  return sum / static_cast<double>(i - lo);
}

SettleBody::SettleBody(const TriMesh& mesh) {
  mesh.validate();
  const geom::MassProperties mp = geom::mass_properties(mesh);
  com_ = mp.com;
  volume_ = mp.volume;
  hull_ = geom::build_facet_hull(geom::convex_hull(mesh.vertices));
  for (const Vec3& v : hull_.vertices)
    radius_ = std::max(radius_, geom::norm(v));
}

std::pair<SettleOutcome, InstabilityTrace> run_settle(const SettleBody& body,
                                                      const RigidPose& start,
                                                      const TableConfig& table,
                                                      const SettleParams& params) {
  params.validate();
  start.validate();
  const Frame f = make_frame(table);
  const auto& verts_b = body.hull().vertices;

  InstabilityTrace trace;
  trace.window = params.window;
  RigidPose pose = to_table(f, start);
  trace.poses.push_back(to_world(f, pose));

  auto push_step = [&](const RigidPose& next, double m) {
    trace.poses.push_back(to_world(f, next));
    trace.movements.push_back(m);
    trace.instabilities.push_back(
        instability(trace.movements, params.window, trace.movements.size()));
  };

  // Step 1: vertical drop to first contact.
  {
    RigidPose dropped = pose;
    snap_to_table(verts_b, dropped);
    push_step(dropped, geom::pose_delta(pose, dropped));
    pose = dropped;
  }

  int resting_facet = -1;
  std::vector<Vec3> verts(verts_b.size());
  while (static_cast<int>(trace.movements.size()) < params.max_steps) {
    for (std::size_t i = 0; i < verts_b.size(); ++i)
      verts[i] = pose.apply(verts_b[i]);
    const ContactState st = analyze(body, f, pose, verts);
    if (st.resting) {
      resting_facet = st.facet;
      push_step(pose, 0.0);
    } else {
      resting_facet = -1;
      const auto theta = next_contact_angle(verts, st.pivot_point, st.pivot_axis);
      if (!theta) break;  // no landing vertex: give up, converged stays false
      const Mat3 rot = geom::axis_angle(st.pivot_axis, *theta);
      RigidPose next;
      next.R = geom::orthonormalized(rot * pose.R);
      next.T = st.pivot_point + rot * (pose.T - st.pivot_point);
      snap_to_table(verts_b, next);
      push_step(next, geom::pose_delta(pose, next));
      pose = next;
    }
    // The metric alone cannot tell "has not moved yet" from "at rest", so
    // convergence is only declared once a contact analysis has run.
    if (trace.movements.size() >= 2 &&
        trace.instabilities.back() < params.epsilon) {
      trace.converged = true;
      break;
    }
  }

  SettleOutcome out;
  out.pose = to_world(f, pose);
  out.resting_facet = resting_facet;
  out.instability = trace.instabilities.back();
  out.stable = out.instability < params.epsilon1;
  return {out, trace};
}

std::pair<SettleOutcome, InstabilityTrace> run_settle(const TriMesh& mesh,
                                                      const RigidPose& start,
                                                      const TableConfig& table,
                                                      const SettleParams& params) {
  return run_settle(SettleBody(mesh), start, table, params);
}

std::vector<SettleOutcome> drop_grid(const SettleBody& body,
                                     const TableConfig& table,
                                     const SettleParams& params,
                                     int subdivisions, int threads) {
  if (subdivisions < 1)
    fail(ErrorKind::ValidationError, "drop grid needs at least 1 subdivision");
  params.validate();
  table.validate();
  const int n = subdivisions;
  const std::size_t total =
      static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
      static_cast<std::size_t>(n);
  std::vector<SettleOutcome> out(total);
  const Vec3 offset = table.normal * (1.25 * body.bounding_radius());
  parallel_for(total, threads, [&](std::size_t idx) {
    const int roll = static_cast<int>(idx) / (n * n);
    const int pitch = (static_cast<int>(idx) / n) % n;
    const int yaw = static_cast<int>(idx) % n;
    auto center = [&](int k) { return 2.0 * kPi * (k + 0.5) / n; };
    RigidPose start;
    start.R = geom::rot_z(center(yaw)) * geom::rot_y(center(pitch)) *
              geom::rot_x(center(roll));
    start.T = offset;
    out[idx] = run_settle(body, start, table, params).first;
  });
  return out;
}

std::string trace_to_jsonl(const InstabilityTrace& trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.poses.size(); ++i) {
    nlohmann::json rec;
    rec["step"] = i;
    rec["rotation"] = trace.poses[i].R.m;
    rec["translation"] = {trace.poses[i].T.x, trace.poses[i].T.y,
                          trace.poses[i].T.z};
    if (i == 0) {
      rec["movement"] = nullptr;
      rec["instability"] = nullptr;
    } else {
      rec["movement"] = trace.movements[i - 1];
      rec["instability"] = trace.instabilities[i - 1];
    }
    out += rec.dump();
    out += '\n';
  }
  return out;
}

}  // namespace stableplace::settle
