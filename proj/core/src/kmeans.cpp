#include "playbench/kmeans.hpp"

#include <string>

#include "playbench/error.hpp"

namespace playbench {

Assignment assign_clusters(const PointCloud& cloud, const CentroidSet& centers) {
  if (centers.centers.empty()) throw Error(Errc::invalid_input, "assign_clusters: no centers");
  if (cloud.points.empty()) throw Error(Errc::invalid_input, "assign_clusters: empty cloud");

  Assignment out;
  out.clusters.reserve(cloud.points.size());
  out.distances.reserve(cloud.points.size());
  for (const Point& p : cloud.points) {
    std::size_t best = 0;
    std::int64_t best_d = squared_distance(p, centers.centers[0]);
    for (std::size_t j = 1; j < centers.centers.size(); ++j) {
      const std::int64_t d = squared_distance(p, centers.centers[j]);
      if (d < best_d) {  // strict: earlier index wins ties
        best = j;
        best_d = d;
      }
    }
    out.clusters.push_back(best);
    out.distances.push_back(best_d);
  }
  return out;
}

ColouredCloud colour_points(const PointCloud& cloud, const Assignment& assignment) {
  if (assignment.clusters.size() != cloud.points.size()) {
    throw Error(Errc::invalid_input, "colour_points: assignment has " +
                                         std::to_string(assignment.clusters.size()) + " entries for " +
                                         std::to_string(cloud.points.size()) + " points");
  }
  ColouredCloud out;
  out.entries.reserve(cloud.points.size());
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    const std::size_t c = assignment.clusters[i];
    out.entries.push_back({cloud.points[i], c, std::string(kPalette[c % kPalette.size()])});
  }
  return out;
}

KMeansResult run_kmeans(std::size_t n, std::size_t k, const StageBounds& bounds, Rng64 rng) {
  auto centers = gen_mass_centers(k, bounds, rng);
  auto cloud = gen_point_cloud(n, bounds, centers.rng);
  KMeansResult result{std::move(cloud.value), std::move(centers.value), {}, {}};
  result.assignment = assign_clusters(result.cloud, result.centers);
  result.coloured = colour_points(result.cloud, result.assignment);
  return result;
}

}  // namespace playbench
