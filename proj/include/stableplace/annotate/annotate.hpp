#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stableplace/geom/types.hpp"
#include "stableplace/settle/settle.hpp"

namespace stableplace::annotate {

using geom::RigidPose;
using geom::TriMesh;
using geom::Vec3;

struct ClusterParams {
  double eps_deg = 10.0;  // angular DBSCAN radius
  int min_pts = 3;        // neighborhood size (self included) to be core
  void validate() const;
};

// One verified resting plane of an object.
struct StablePlane {
  Vec3 normal;                   // object-frame "down" direction, unit
  std::vector<int> support_vertices;  // mesh vertices in the contact band
  RigidPose rep_pose;            // a settled flat-table pose on this plane
  int cluster_size = 0;          // drop outcomes that landed here
  double score = 0.0;            // cluster share of all drops, in [0, 1]
};

struct AnnotateParams {
  settle::SettleParams settle;
  ClusterParams cluster;
  double band = 0.05;      // support mask height fraction
  double tilt_deg = 10.0;  // verification table tilt
  int subdivisions = 8;    // drop grid resolution per Euler axis
  int threads = 1;
  std::uint64_t seed = 0;  // recorded for provenance
  void validate() const;
};

struct AnnotationRecord {
  std::string object_id;
  std::string mesh_path;
  std::vector<StablePlane> planes;  // sorted by cluster size, descending
  AnnotateParams params;
  std::string tool_version;
  bool no_stable_planes = false;
};

struct DirectionCluster {
  Vec3 direction;            // normalized mean of member directions
  std::vector<int> members;  // indices into the outcome list
};

// DBSCAN over object-frame down directions (R^T * -z per outcome) with the
// angle metric. Callers pass stable outcomes only. Noise points are
// discarded; clusters come back in discovery order (deterministic).
std::vector<DirectionCluster> cluster_resting_directions(
    const std::vector<settle::SettleOutcome>& outcomes, double eps_deg,
    int min_pts);

// Vertices within the lower `band` fraction of the object's height when
// `direction` points straight down. Throws DegenerateInput when the object
// has no extent along the direction.
std::vector<int> extract_support_mask(const TriMesh& mesh,
                                      const Vec3& direction,
                                      double band = 0.05);

// True when the object, seated on the candidate plane, stays put on a table
// tilted by tilt_deg: settling must converge with U below epsilon2 and the
// final down direction within eps_deg of the candidate, for every one of 8
// tilt azimuths.
bool tilt_verify(const settle::SettleBody& body, const Vec3& direction,
                 const settle::SettleParams& params, double tilt_deg = 10.0,
                 double eps_deg = 10.0);
bool tilt_verify(const TriMesh& mesh, const StablePlane& plane,
                 const settle::SettleParams& params, double tilt_deg = 10.0,
                 double eps_deg = 10.0);

// Full pipeline: drop grid, stability filter, direction clustering, support
// masks, tilt verification. Objects where nothing survives come back with
// an empty plane list and the no_stable_planes flag set.
AnnotationRecord annotate(const TriMesh& mesh, const AnnotateParams& params,
                          const std::string& object_id = "",
                          const std::string& mesh_path = "");

// Lossless JSON round trip of a record.
std::string record_to_json(const AnnotationRecord& record);
AnnotationRecord record_from_json(const std::string& text);

}  // namespace stableplace::annotate
