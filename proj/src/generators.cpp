#include "finehyp/generators.hpp"

#include <numeric>
#include <string>

namespace finehyp {

int64_t regular_tree_size(int degree, int radius) {
  if (degree < 2) throw InputError("regular_tree degree must be >= 2");
  if (radius < 0) throw InputError("regular_tree radius must be >= 0");
  int64_t total = 1, level = degree;
  for (int d = 1; d <= radius; ++d) {
    total += level;
    if (total > (int64_t{1} << 40)) throw InputError("regular_tree size overflows practical limits");
    level *= (degree - 1);
  }
  return total;
}

Graph regular_tree(int degree, int radius) {
  int64_t n64 = regular_tree_size(degree, radius);
  if (n64 > INT32_MAX) throw InputError("regular_tree too large for 32-bit vertex ids");
  VertexId n = static_cast<VertexId>(n64);
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  // Children are assigned ids in breadth-first order; level boundaries follow
  // from each parent emitting its children consecutively.
  VertexId next = 1;
  std::vector<std::pair<VertexId, int>> frontier{{0, 0}};  // (vertex, depth)
  std::vector<std::pair<VertexId, int>> nextfrontier;
  while (!frontier.empty()) {
    nextfrontier.clear();
    for (auto [v, depth] : frontier) {
      if (depth == radius) continue;
      int kids = (depth == 0) ? degree : degree - 1;
      for (int c = 0; c < kids; ++c) {
        edges.emplace_back(v, next);
        nextfrontier.emplace_back(next, depth + 1);
        ++next;
      }
    }
    frontier.swap(nextfrontier);
  }
  if (next != n) throw InvariantViolation("regular_tree numbering mismatch");
  return Graph::from_edges(n, edges);
}

Graph farey_graph(int max_q) {
  if (max_q < 1) throw InputError("farey_graph needs max_q >= 1");
  // (p, q) pairs; 1/0 first, then ascending (q, p).
  std::vector<std::pair<int, int>> verts;
  verts.emplace_back(1, 0);
  for (int q = 1; q <= max_q; ++q)
    for (int p = -max_q; p <= max_q; ++p)
      if (std::gcd(std::abs(p), q) == 1) verts.emplace_back(p, q);

  VertexId n = static_cast<VertexId>(verts.size());
  std::vector<std::string> labels(n);
  for (VertexId i = 0; i < n; ++i)
    labels[i] = std::to_string(verts[i].first) + "/" + std::to_string(verts[i].second);

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < n; ++i) {
    auto [p, q] = verts[i];
    for (VertexId j = i + 1; j < n; ++j) {
      auto [r, s] = verts[j];
      int64_t det = int64_t{p} * s - int64_t{q} * r;
      if (det == 1 || det == -1) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle_graph needs n >= 3");
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(n);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

}  // namespace finehyp
