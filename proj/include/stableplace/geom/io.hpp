#pragma once

#include <string>

#include "stableplace/geom/types.hpp"

namespace stableplace::geom {

// Mesh and point-cloud file IO. Formats are picked by extension:
//   meshes  .obj, .ply
//   clouds  .ply, .xyz  (xyz rows: "x y z [score [label]]")
// PLY reads both ascii and binary_little_endian; writes default to ascii
// with round-trip-exact doubles so artifacts diff cleanly byte for byte.
// Cloud scores/labels map to PLY vertex properties "score" and "label".
// Writes go through a temp file and rename, so readers never see a partial
// file.

TriMesh load_mesh(const std::string& path);
void save_mesh(const std::string& path, const TriMesh& mesh);

PointCloud load_cloud(const std::string& path);
void save_cloud(const std::string& path, const PointCloud& cloud,
                bool binary = false);

// Atomically replaces `path` with `data`.
void atomic_write(const std::string& path, const std::string& data);

// Reads a whole file; fails with IoError when missing or unreadable.
std::string read_file(const std::string& path);

}  // namespace stableplace::geom
