#include "finehyp/graph.hpp"

#include <algorithm>
#include <deque>

namespace finehyp {

Graph Graph::from_edges(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                        std::vector<std::string> labels) {
  if (n <= 0) throw InputError("graph must have at least one vertex");
  if (!labels.empty() && static_cast<VertexId>(labels.size()) != n)
    throw InputError("label count does not match vertex count");

  Graph g;
  g.n_ = n;
  std::vector<int32_t> deg(n, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InputError("edge endpoint out of range: " + std::to_string(u) + "," + std::to_string(v));
    if (u == v) throw InputError("loop edge at vertex " + std::to_string(u));
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adj_.resize(g.offsets_[n]);
  std::vector<int64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.adj_[fill[u]++] = v;
    g.adj_[fill[v]++] = u;
  }
  for (VertexId v = 0; v < n; ++v) {
    auto b = g.adj_.begin() + g.offsets_[v], e = g.adj_.begin() + g.offsets_[v + 1];
    std::sort(b, e);
    if (std::adjacent_find(b, e) != e)
      throw InputError("duplicate edge at vertex " + std::to_string(v));
  }

  // Connectivity: every operation in the library assumes one component.
  std::vector<char> seen(n, 0);
  std::deque<VertexId> queue{0};
  seen[0] = 1;
  VertexId reached = 1;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (const VertexId* p = g.neighbors_begin(u); p != g.neighbors_end(u); ++p)
      if (!seen[*p]) {
        seen[*p] = 1;
        ++reached;
        queue.push_back(*p);
      }
  }
  if (reached != n)
    throw InputError("graph is disconnected: reached " + std::to_string(reached) + " of " +
                     std::to_string(n) + " vertices");

  if (!labels.empty()) {
    g.labels_ = std::move(labels);
    for (VertexId v = 0; v < n; ++v) {
      auto [it, fresh] = g.label_index_.emplace(g.labels_[v], v);
      (void)it;
      if (!fresh) throw InputError("duplicate vertex label: " + g.labels_[v]);
    }
  }
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(neighbors_begin(u), neighbors_end(u), v);
}

std::optional<VertexId> Graph::find_label(const std::string& label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int32_t> bfs_distances(const Graph& g, VertexId src) {
  g.check_vertex(src);
  std::vector<int32_t> dist(g.size(), -1);
  std::vector<VertexId> frontier{src}, next;
  dist[src] = 0;
  int32_t d = 0;
  while (!frontier.empty()) {
    ++d;
    next.clear();
    for (VertexId u : frontier)
      for (const VertexId* p = g.neighbors_begin(u); p != g.neighbors_end(u); ++p)
        if (dist[*p] < 0) {
          dist[*p] = d;
          next.push_back(*p);
        }
    frontier.swap(next);
  }
  return dist;
}

int32_t distance(const Graph& g, VertexId u, VertexId v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) return 0;
  std::vector<int32_t> dist(g.size(), -1);
  std::vector<VertexId> frontier{u}, next;
  dist[u] = 0;
  int32_t d = 0;
  while (!frontier.empty()) {
    ++d;
    next.clear();
    for (VertexId a : frontier)
      for (const VertexId* p = g.neighbors_begin(a); p != g.neighbors_end(a); ++p)
        if (dist[*p] < 0) {
          if (*p == v) return d;
          dist[*p] = d;
          next.push_back(*p);
        }
    frontier.swap(next);
  }
  throw InvariantViolation("unreachable vertex in connected graph");
}

std::vector<VertexId> ball(const Graph& g, VertexId center, int32_t radius) {
  g.check_vertex(center);
  if (radius < 0) throw InputError("ball radius must be nonnegative");
  BfsScratch scratch(g.size());
  std::vector<VertexId> out = scratch.run(g, center, radius);
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<VertexId>& BfsScratch::run(const Graph& g, VertexId src, int32_t maxdepth) {
  g.check_vertex(src);
  ++epoch_;
  order_.clear();
  order_.push_back(src);
  stamp_[src] = epoch_;
  dist_[src] = 0;
  for (size_t head = 0; head < order_.size(); ++head) {
    VertexId u = order_[head];
    if (dist_[u] == maxdepth) continue;
    for (const VertexId* p = g.neighbors_begin(u); p != g.neighbors_end(u); ++p)
      if (stamp_[*p] != epoch_) {
        stamp_[*p] = epoch_;
        dist_[*p] = dist_[u] + 1;
        order_.push_back(*p);
      }
  }
  return order_;
}

const std::vector<VertexId>& BfsScratch::run_descending(const Graph& g, VertexId src,
                                                        int32_t maxdepth,
                                                        const std::vector<int32_t>& level) {
  g.check_vertex(src);
  ++epoch_;
  order_.clear();
  order_.push_back(src);
  stamp_[src] = epoch_;
  dist_[src] = 0;
  for (size_t head = 0; head < order_.size(); ++head) {
    VertexId u = order_[head];
    if (dist_[u] == maxdepth) continue;
    for (const VertexId* p = g.neighbors_begin(u); p != g.neighbors_end(u); ++p)
      if (stamp_[*p] != epoch_ && level[*p] == level[u] - 1) {
        stamp_[*p] = epoch_;
        dist_[*p] = dist_[u] + 1;
        order_.push_back(*p);
      }
  }
  return order_;
}

DistanceOracle::DistanceOracle(const Graph& g, bool build_apsp) : g_(g) {
  if (build_apsp) {
    if (g.size() > kApspCutoff)
      throw InputError("APSP cache requested for graph above cutoff (" +
                       std::to_string(g.size()) + " > " + std::to_string(kApspCutoff) + ")");
    const size_t n = static_cast<size_t>(g.size());
    apsp_.resize(n * n);
    for (VertexId s = 0; s < g.size(); ++s) {
      std::vector<int32_t> row = bfs_distances(g, s);
      for (size_t j = 0; j < n; ++j) {
        if (row[j] > UINT16_MAX) throw InvariantViolation("distance exceeds uint16 cache range");
        apsp_[static_cast<size_t>(s) * n + j] = static_cast<uint16_t>(row[j]);
      }
    }
  }
}

int32_t DistanceOracle::operator()(VertexId u, VertexId v) const {
  g_.check_vertex(u);
  g_.check_vertex(v);
  if (!apsp_.empty())
    return apsp_[static_cast<size_t>(u) * static_cast<size_t>(g_.size()) + static_cast<size_t>(v)];
  auto it = rows_.find(u);
  if (it != rows_.end()) return it->second[v];
  it = rows_.find(v);
  if (it != rows_.end()) return it->second[u];
  return row(u)[v];
}

const std::vector<int32_t>& DistanceOracle::row(VertexId src) const {
  g_.check_vertex(src);
  auto it = rows_.find(src);
  if (it == rows_.end()) it = rows_.emplace(src, bfs_distances(g_, src)).first;
  return it->second;
}

HalfInteger DistanceOracle::gromov_product(VertexId x, VertexId y, VertexId z) const {
  const auto& o = *this;
  int64_t twice = static_cast<int64_t>(o(x, z)) + o(y, z) - o(x, y);
  if (twice < 0) throw InvariantViolation("negative Gromov product: triangle inequality broken");
  return HalfInteger{twice};
}

}  // namespace finehyp
