#include "stableplace/geom/convex_hull.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_map>
#include <vector>

// Incremental quickhull with per-face conflict lists. Points more than eps
// outside a face get queued on it; faces are expanded toward their farthest
// conflict point until no face sees anything. eps scales with the input so
// every input point ends up inside or within eps of the final hull, well
// under the 1e-9 containment budget the callers rely on.

namespace stableplace::geom {

namespace {

constexpr double kDedupTol = 1e-12;

struct Face {
  int v[3];
  int nb[3];  // neighbor across edge (v[k], v[k+1])
  Vec3 n;
  double d;
  std::vector<int> conflict;
  double far_dist = 0.0;
  int far_idx = -1;
  bool alive = true;
};

struct HullBuilder {
  const std::vector<Point3>& pts;
  double eps;
  std::vector<Face> faces;
  std::deque<int> pending;

  explicit HullBuilder(const std::vector<Point3>& p, double e)
      : pts(p), eps(e) {}

  double dist(int f, int p) const {
    return dot(faces[f].n, pts[p]) + faces[f].d;
  }

  void set_plane(Face& f) {
    const Vec3& a = pts[f.v[0]];
    const Vec3& b = pts[f.v[1]];
    const Vec3& c = pts[f.v[2]];
    f.n = normalized(cross(b - a, c - a));
    f.d = -dot(f.n, (a + b + c) / 3.0);
  }

  int add_face(int a, int b, int c) {
    Face f;
    f.v[0] = a;
    f.v[1] = b;
    f.v[2] = c;
    f.nb[0] = f.nb[1] = f.nb[2] = -1;
    set_plane(f);
    faces.push_back(std::move(f));
    return static_cast<int>(faces.size()) - 1;
  }

  void link(int f, int slot, int g) {
    faces[f].nb[slot] = g;
    const int a = faces[f].v[slot];
    const int b = faces[f].v[(slot + 1) % 3];
    for (int k = 0; k < 3; ++k) {
      if (faces[g].v[k] == b && faces[g].v[(k + 1) % 3] == a) {
        faces[g].nb[k] = f;
        return;
      }
    }
    fail(ErrorKind::DegenerateInput, "hull adjacency mismatch");
  }

  void assign_conflict(int f, int p, double dval) {
    Face& face = faces[f];
    face.conflict.push_back(p);
    if (dval > face.far_dist ||
        (dval == face.far_dist && p < face.far_idx)) {
      face.far_dist = dval;
      face.far_idx = p;
    }
  }

  // Sends each candidate to the face it is farthest outside of.
  void distribute(const std::vector<int>& candidates,
                  const std::vector<int>& target_faces) {
    for (int p : candidates) {
      double best = eps;
      int best_f = -1;
      for (int f : target_faces) {
        const double dv = dist(f, p);
        if (dv > best) {
          best = dv;
          best_f = f;
        }
      }
      if (best_f >= 0) assign_conflict(best_f, p, best);
    }
  }

  void run() {
    while (!pending.empty()) {
      const int fi = pending.front();
      pending.pop_front();
      if (!faces[fi].alive || faces[fi].conflict.empty()) continue;
      expand(fi, faces[fi].far_idx);
    }
  }

  void expand(int seed, int apex) {
    // Flood-fill the faces that see the apex.
    std::vector<int> visible{seed};
    std::vector<char> seen(faces.size(), 0);
    seen[seed] = 1;
    struct Crossing {
      int a, b, outside;
    };
    std::vector<Crossing> horizon;
    for (std::size_t i = 0; i < visible.size(); ++i) {
      const int f = visible[i];
      for (int k = 0; k < 3; ++k) {
        const int g = faces[f].nb[k];
        if (seen[g]) continue;
        if (dist(g, apex) > eps) {
          seen[g] = 1;
          visible.push_back(g);
        } else {
          horizon.push_back(
              {faces[f].v[k], faces[f].v[(k + 1) % 3], g});
        }
      }
    }
    // The boundary of the visible disk is a single loop; chain it.
    std::unordered_map<int, std::size_t> next_by_start;
    next_by_start.reserve(horizon.size());
    for (std::size_t i = 0; i < horizon.size(); ++i) {
      if (!next_by_start.emplace(horizon[i].a, i).second)
        fail(ErrorKind::DegenerateInput, "hull horizon is not a simple loop");
    }
    std::vector<std::size_t> loop;
    loop.reserve(horizon.size());
    int cursor = horizon[0].a;
    for (std::size_t i = 0; i < horizon.size(); ++i) {
      const auto it = next_by_start.find(cursor);
      if (it == next_by_start.end())
        fail(ErrorKind::DegenerateInput, "hull horizon is not a simple loop");
      loop.push_back(it->second);
      cursor = horizon[it->second].b;
    }
    if (cursor != horizon[0].a)
      fail(ErrorKind::DegenerateInput, "hull horizon is not a simple loop");

    // Fan new faces from the apex over the horizon loop.
    std::vector<int> created(loop.size());
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const Crossing& h = horizon[loop[i]];
      created[i] = add_face(h.a, h.b, apex);
    }
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const Crossing& h = horizon[loop[i]];
      const std::size_t nxt = (i + 1) % loop.size();
      const std::size_t prv = (i + loop.size() - 1) % loop.size();
      link(created[i], 0, h.outside);
      faces[created[i]].nb[1] = created[nxt];
      faces[created[i]].nb[2] = created[prv];
    }

    // Orphaned conflict points get another chance against the new faces.
    std::vector<int> orphans;
    for (int f : visible) {
      faces[f].alive = false;
      for (int p : faces[f].conflict)
        if (p != apex) orphans.push_back(p);
      faces[f].conflict.clear();
    }
    distribute(orphans, created);
    for (int f : created)
      if (!faces[f].conflict.empty()) pending.push_back(f);
  }
};

bool lex_less(const Point3& a, const Point3& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.z < b.z;
}

std::vector<Point3> dedup_points(const std::vector<Point3>& in) {
  std::vector<int> order(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return lex_less(in[a], in[b]); });
  std::vector<Point3> out;
  out.reserve(in.size());
  for (int idx : order) {
    const Point3& p = in[idx];
    bool dup = false;
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
      if (p.x - it->x > kDedupTol) break;
      if (distance(p, *it) <= kDedupTol) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(p);
  }
  return out;
}

}  // namespace

TriMesh convex_hull(const std::vector<Point3>& points) {
  for (const auto& p : points)
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
      fail(ErrorKind::ValidationError, "non-finite point coordinate");

  const std::vector<Point3> pts = dedup_points(points);
  const int n = static_cast<int>(pts.size());
  if (n < 4)
    fail(ErrorKind::DegenerateInput,
         "convex hull needs at least 4 distinct points");

  Vec3 lo = pts[0], hi = pts[0];
  for (const auto& p : pts) {
    lo = {std::fmin(lo.x, p.x), std::fmin(lo.y, p.y), std::fmin(lo.z, p.z)};
    hi = {std::fmax(hi.x, p.x), std::fmax(hi.y, p.y), std::fmax(hi.z, p.z)};
  }
  const double extent = norm(hi - lo);
  const double eps = std::fmax(1e-12, extent * 1e-12);

  // Extreme points per axis. Strict comparisons keep the first (lowest
  // index) extreme on ties, and the dedup pass already sorted the points
  // lexicographically, so the choice is deterministic.
  int ext[6] = {0, 0, 0, 0, 0, 0};
  for (int i = 1; i < n; ++i) {
    const Point3& p = pts[i];
    if (p.x < pts[ext[0]].x) ext[0] = i;
    if (p.x > pts[ext[1]].x) ext[1] = i;
    if (p.y < pts[ext[2]].y) ext[2] = i;
    if (p.y > pts[ext[3]].y) ext[3] = i;
    if (p.z < pts[ext[4]].z) ext[4] = i;
    if (p.z > pts[ext[5]].z) ext[5] = i;
  }

  // Longest segment between extremes seeds the simplex.
  int s0 = ext[0], s1 = ext[1];
  double best_len = -1.0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      const double len = norm2(pts[ext[i]] - pts[ext[j]]);
      if (len > best_len) {
        best_len = len;
        s0 = ext[i];
        s1 = ext[j];
      }
    }
  if (std::sqrt(std::fmax(best_len, 0.0)) <= eps)
    fail(ErrorKind::DegenerateInput, "all points coincide");

  const Vec3 seg = pts[s1] - pts[s0];
  int s2 = -1;
  double best_line = eps;
  for (int i = 0; i < n; ++i) {
    const double d2 = norm(cross(pts[i] - pts[s0], seg)) / norm(seg);
    if (d2 > best_line) {
      best_line = d2;
      s2 = i;
    }
  }
  if (s2 < 0) fail(ErrorKind::DegenerateInput, "points are collinear");

  const Vec3 pn = normalized(cross(seg, pts[s2] - pts[s0]));
  int s3 = -1;
  double best_plane = eps;
  for (int i = 0; i < n; ++i) {
    const double d3 = std::fabs(dot(pn, pts[i] - pts[s0]));
    if (d3 > best_plane) {
      best_plane = d3;
      s3 = i;
    }
  }
  if (s3 < 0) fail(ErrorKind::DegenerateInput, "points are coplanar");

  if (dot(pn, pts[s3] - pts[s0]) > 0.0) std::swap(s1, s2);

  HullBuilder hb(pts, eps);
  const int f0 = hb.add_face(s0, s1, s2);
  const int f1 = hb.add_face(s0, s3, s1);
  const int f2 = hb.add_face(s1, s3, s2);
  const int f3 = hb.add_face(s2, s3, s0);
  hb.link(f0, 0, f1);
  hb.link(f0, 1, f2);
  hb.link(f0, 2, f3);
  hb.link(f1, 1, f2);
  hb.link(f2, 1, f3);
  hb.link(f3, 1, f1);

  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  hb.distribute(all, {f0, f1, f2, f3});
  for (int f : {f0, f1, f2, f3})
    if (!hb.faces[f].conflict.empty()) hb.pending.push_back(f);
  hb.run();

  // Compact surviving faces and their vertices in first-use order.
  TriMesh mesh;
  std::vector<int> remap(n, -1);
  for (const Face& f : hb.faces) {
    if (!f.alive) continue;
    std::array<int, 3> tri;
    for (int k = 0; k < 3; ++k) {
      int& slot = remap[f.v[k]];
      if (slot < 0) {
        slot = static_cast<int>(mesh.vertices.size());
        mesh.vertices.push_back(pts[f.v[k]]);
      }
      tri[k] = slot;
    }
    mesh.faces.push_back(tri);
  }
  return mesh;
}

TriMesh convex_hull(const PointCloud& cloud) {
  cloud.validate();
  return convex_hull(cloud.points);
}

}  // namespace stableplace::geom
