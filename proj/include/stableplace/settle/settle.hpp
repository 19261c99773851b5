#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "stableplace/geom/facet_hull.hpp"
#include "stableplace/geom/types.hpp"

namespace stableplace::settle {

using geom::FacetHull;
using geom::RigidPose;
using geom::TriMesh;
using geom::Vec3;

// Table the object settles onto: the plane through the world origin with the
// given normal. Gravity is always world -z, so `tilt_deg` is the angle
// between the normal and +z (kept explicitly to make configs readable).
struct TableConfig {
  Vec3 normal{0.0, 0.0, 1.0};
  double tilt_deg = 0.0;

  static TableConfig flat();
  // Normal tilted `tilt_deg` from +z toward the azimuth direction (degrees,
  // 0 = +x, 90 = +y). The downhill direction on the table points along the
  // azimuth.
  static TableConfig tilted(double tilt_deg, double azimuth_deg = 0.0);
  void validate() const;
};

struct SettleParams {
  double epsilon = 1e-4;    // stop: windowed instability below this
  double epsilon1 = 1e-3;   // stable pose threshold on the final value
  double epsilon2 = 1e-3;   // tilt-verification threshold
  int window = 10;          // steps averaged by the instability metric
  int max_steps = 200;
  void validate() const;
};

// Movement per step is the pose-matrix change (pose_delta); instability is
// its windowed mean. Step 0 is the start pose, step 1 the initial drop.
struct InstabilityTrace {
  std::vector<RigidPose> poses;        // world frame, length = steps + 1
  std::vector<double> movements;       // M_i, i = 1..steps
  int window = 10;
  std::vector<double> instabilities;   // U_i, same length as movements
  bool converged = false;
};

struct SettleOutcome {
  RigidPose pose;           // world frame
  int resting_facet = -1;   // facet index into the body's hull, -1 = none
  double instability = 0.0; // final U
  bool stable = false;      // final U < epsilon1
};

// Windowed mean of Eq-style movement magnitudes: for i >= window the mean of
// the last `window` movements ending at i, otherwise the mean of the first
// i. `i` is 1-based; throws IndexOutOfRange outside [1, len].
double instability(const std::vector<double>& movements, int window,
                   std::size_t i);

// Precomputed settling geometry: convex hull with merged facets, solid
// center of mass, bounding radius. Construction throws OpenMesh /
// NonPositiveVolume for surfaces that do not bound a solid.
class SettleBody {
 public:
  explicit SettleBody(const TriMesh& mesh);

  const FacetHull& hull() const { return hull_; }
  const Vec3& com() const { return com_; }        // body frame
  double volume() const { return volume_; }
  double bounding_radius() const { return radius_; }  // about the body origin

 private:
  FacetHull hull_;
  Vec3 com_;
  double volume_ = 0.0;
  double radius_ = 0.0;
};

// Quasi-static settling: the hull drops along the table normal to first
// contact, then topples about support-polygon edges (gravity-projected COM
// outside the support) until the windowed instability falls below epsilon or
// max_steps is reached. One step = one topple, or a no-motion step while at
// rest. Pure function: equal inputs give equal traces.
std::pair<SettleOutcome, InstabilityTrace> run_settle(const SettleBody& body,
                                                      const RigidPose& start,
                                                      const TableConfig& table,
                                                      const SettleParams& params);

std::pair<SettleOutcome, InstabilityTrace> run_settle(const TriMesh& mesh,
                                                      const RigidPose& start,
                                                      const TableConfig& table,
                                                      const SettleParams& params);

// Settles from subdivisions^3 orientations (roll/pitch/yaw grid at cell
// centers), each started one quarter bounding-radius above the table.
// Results are ordered by grid index (roll outermost, yaw innermost)
// regardless of thread count.
std::vector<SettleOutcome> drop_grid(const SettleBody& body,
                                     const TableConfig& table,
                                     const SettleParams& params,
                                     int subdivisions = 8, int threads = 1);

// One JSON object per line: step, pose, movement, instability.
std::string trace_to_jsonl(const InstabilityTrace& trace);

}  // namespace stableplace::settle
