#pragma once

#include <vector>

#include "finehyp/graph.hpp"

namespace finehyp {

using Path = std::vector<VertexId>;

struct GeodesicSet {
  VertexId source = -1;
  VertexId target = -1;
  std::vector<Path> paths;  // lexicographic on vertex sequences
  bool truncated = false;   // more than cap exist; paths holds the first cap
};

inline constexpr int64_t kDefaultGeodesicCap = 100000;

/// All geodesics from x to y, enumerated by descending the distance-to-y
/// gradient (every geodesic step must decrease d(·,y) by exactly 1, and every
/// gradient-descending path is geodesic). Output-sensitive: no blind search.
/// `dist_to_y` may supply a precomputed bfs_distances(g, y) row.
GeodesicSet all_geodesics(const Graph& g, VertexId x, VertexId y,
                          int64_t cap = kDefaultGeodesicCap,
                          const std::vector<int32_t>* dist_to_y = nullptr);

/// True iff d(p[m],p[n]) = |m-n| for all m,n. For a genuine path this reduces
/// to d(front,back) = length, since subpaths of geodesics are geodesic.
/// Throws InputError when consecutive entries are not adjacent.
bool is_geodesic(const Graph& g, const Path& p);

struct ThinnessResult {
  int32_t defect = 0;   // max d(alpha(k), beta(k)) over the sampled triangles
  bool truncated = false;
  // Minimal admissible delta under the strict triangle inequality is defect+1.
  int32_t delta() const { return defect + 1; }
};

/// Thinness defect over all triangles with corners in ball(base, radius):
/// for z, a, b in the ball, geodesics alpha in F(z,a), beta in F(z,b), and
/// integer k <= <a,b>_z, takes the max of d(alpha(k), beta(k)).
/// `cap` bounds each geodesic enumeration; hitting it sets `truncated` and
/// the defect is then only a lower bound.
ThinnessResult thinness_defect(const DistanceOracle& oracle, VertexId base, int32_t radius,
                               int64_t cap = kDefaultGeodesicCap);

}  // namespace finehyp
