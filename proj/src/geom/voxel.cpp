#include "stableplace/geom/voxel.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <map>

namespace stableplace::geom {

namespace {

struct CellAcc {
  Vec3 sum;
  double score_sum = 0.0;
  int count = 0;
  std::map<int, int> label_votes;
};

}  // namespace

PointCloud voxel_downsample(const PointCloud& cloud, double voxel) {
  cloud.validate();
  if (!(voxel > 0.0))
    fail(ErrorKind::ValidationError, "voxel size must be positive");

  using CellKey = std::array<std::int64_t, 3>;
  auto key_of = [voxel](const Vec3& p) {
    return CellKey{static_cast<std::int64_t>(std::floor(p.x / voxel)),
                   static_cast<std::int64_t>(std::floor(p.y / voxel)),
                   static_cast<std::int64_t>(std::floor(p.z / voxel))};
  };

  std::map<CellKey, std::size_t> slot_of_cell;
  std::vector<CellAcc> cells;
  cells.reserve(cloud.size() / 4 + 1);

  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const CellKey key = key_of(cloud.points[i]);
    auto [it, fresh] = slot_of_cell.emplace(key, cells.size());
    if (fresh) cells.emplace_back();
    CellAcc& acc = cells[it->second];
    acc.sum += cloud.points[i];
    acc.count += 1;
    if (cloud.has_scores()) acc.score_sum += cloud.scores[i];
    if (cloud.has_labels()) acc.label_votes[cloud.labels[i]] += 1;
  }

  PointCloud out;
  out.points.reserve(cells.size());
  for (const CellAcc& acc : cells) {
    out.points.push_back(acc.sum / static_cast<double>(acc.count));
    if (cloud.has_scores())
      out.scores.push_back(acc.score_sum / static_cast<double>(acc.count));
    if (cloud.has_labels()) {
      int best_label = 0, best_votes = -1;
      for (const auto& [label, votes] : acc.label_votes) {
        if (votes > best_votes) {  // map order makes ties pick lowest label
          best_votes = votes;
          best_label = label;
        }
      }
      out.labels.push_back(best_label);
    }
  }
  return out;
}

}  // namespace stableplace::geom
