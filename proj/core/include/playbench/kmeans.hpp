#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "playbench/dataset.hpp"

namespace playbench {

struct Assignment {
  std::vector<std::size_t> clusters;      // 0-based center index per point
  std::vector<std::int64_t> distances;    // squared distance to that center

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct ColouredPoint {
  Point point;
  std::size_t cluster = 0;
  std::string color;

  friend bool operator==(const ColouredPoint&, const ColouredPoint&) = default;
};

struct ColouredCloud {
  std::vector<ColouredPoint> entries;

  friend bool operator==(const ColouredCloud&, const ColouredCloud&) = default;
};

// Tableau 10; cluster i is drawn in kPalette[i % 10].
inline constexpr std::array<std::string_view, 10> kPalette = {
    "#1F77B4", "#FF7F0E", "#2CA02C", "#D62728", "#9467BD",
    "#8C564B", "#E377C2", "#7F7F7F", "#BCBD22", "#17BECF",
};

constexpr std::int64_t squared_distance(Point p, Point q) noexcept {
  const std::int64_t dx = static_cast<std::int64_t>(p.x) - q.x;
  const std::int64_t dy = static_cast<std::int64_t>(p.y) - q.y;
  return dx * dx + dy * dy;
}

/// One nearest-center pass. Ties go to the lowest center index.
/// Throws Error(invalid_input) when either set is empty.
[[nodiscard]] Assignment assign_clusters(const PointCloud& cloud, const CentroidSet& centers);

/// Throws Error(invalid_input) when the assignment length differs from the cloud.
[[nodiscard]] ColouredCloud colour_points(const PointCloud& cloud, const Assignment& assignment);

// Everything a single-shot clustering run produces.
struct KMeansResult {
  PointCloud cloud;
  CentroidSet centers;
  Assignment assignment;
  ColouredCloud coloured;

  friend bool operator==(const KMeansResult&, const KMeansResult&) = default;
};

/// Draws the centers, then the points, from one generator stream, assigns and colours.
[[nodiscard]] KMeansResult run_kmeans(std::size_t n, std::size_t k, const StageBounds& bounds, Rng64 rng);

}  // namespace playbench
