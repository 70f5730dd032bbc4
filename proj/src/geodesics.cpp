#include "finehyp/geodesics.hpp"

#include <algorithm>

namespace finehyp {

GeodesicSet all_geodesics(const Graph& g, VertexId x, VertexId y, int64_t cap,
                          const std::vector<int32_t>* dist_to_y) {
  g.check_vertex(x);
  g.check_vertex(y);
  if (cap <= 0) throw InputError("geodesic cap must be positive");

  std::vector<int32_t> local;
  if (!dist_to_y) {
    local = bfs_distances(g, y);
    dist_to_y = &local;
  }
  const std::vector<int32_t>& level = *dist_to_y;

  GeodesicSet out;
  out.source = x;
  out.target = y;

  // DFS over the descending DAG. Neighbor lists are sorted, so emitting in
  // DFS order yields lexicographic path order.
  Path path{x};
  std::vector<const VertexId*> iters{g.neighbors_begin(x)};
  while (!iters.empty()) {
    VertexId u = path.back();
    if (u == y) {
      if (static_cast<int64_t>(out.paths.size()) == cap) {
        out.truncated = true;
        break;
      }
      out.paths.push_back(path);
      path.pop_back();
      iters.pop_back();
      continue;
    }
    const VertexId* end = g.neighbors_end(u);
    const VertexId*& it = iters.back();
    while (it != end && level[*it] != level[u] - 1) ++it;
    if (it == end) {
      path.pop_back();
      iters.pop_back();
    } else {
      VertexId w = *it++;
      path.push_back(w);
      iters.push_back(g.neighbors_begin(w));
    }
  }
  if (!out.truncated && out.paths.empty())
    throw InvariantViolation("geodesic enumeration produced no path in a connected graph");
  return out;
}

bool is_geodesic(const Graph& g, const Path& p) {
  if (p.empty()) throw InputError("empty path");
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    g.check_vertex(p[i]);
    if (!g.has_edge(p[i], p[i + 1]))
      throw InputError("path has non-adjacent consecutive pair at index " + std::to_string(i));
  }
  g.check_vertex(p.back());
  if (p.size() == 1) return true;
  return distance(g, p.front(), p.back()) == static_cast<int32_t>(p.size()) - 1;
}

ThinnessResult thinness_defect(const DistanceOracle& oracle, VertexId base, int32_t radius,
                               int64_t cap) {
  const Graph& g = oracle.graph();
  std::vector<VertexId> corners = ball(g, base, radius);
  ThinnessResult result;

  for (VertexId z : corners) {
    const std::vector<int32_t>& dz = oracle.row(z);
    // Geodesic fans toward z share the one distance row; a path stored as
    // corner -> z is read from the tail, so path[len-k] sits at distance k
    // from the apex.
    std::vector<GeodesicSet> fans;
    fans.reserve(corners.size());
    for (VertexId a : corners) {
      fans.push_back(all_geodesics(g, a, z, cap, &dz));
      if (fans.back().truncated) result.truncated = true;
    }
    for (size_t ia = 0; ia < corners.size(); ++ia) {
      for (size_t ib = ia; ib < corners.size(); ++ib) {
        HalfInteger gp = oracle.gromov_product(corners[ia], corners[ib], z);
        int64_t kmax = gp.floor();
        if (2 * kmax <= result.defect) continue;  // d(alpha(k),beta(k)) <= 2k
        for (const Path& alpha : fans[ia].paths) {
          for (const Path& beta : fans[ib].paths) {
            int64_t reach = std::min<int64_t>(
                kmax, std::min(alpha.size(), beta.size()) - 1);
            for (int64_t k = reach; k >= 1; --k) {
              if (2 * k <= result.defect) break;
              int32_t d = oracle(alpha[alpha.size() - 1 - k], beta[beta.size() - 1 - k]);
              if (d > result.defect) result.defect = d;
            }
          }
        }
      }
    }
  }
  return result;
}

}  // namespace finehyp
