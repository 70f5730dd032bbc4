#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace finehyp {

using VertexId = int32_t;

/// Thrown when an input violates a documented precondition (bad vertex id,
/// malformed path, parameter out of range).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a computation would need data outside the certified region of
/// a finite truncation (proxy too shallow, image outside the graph).
struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a structural invariant that the library itself guarantees is
/// observed to fail; indicates a bug or corrupted input, never user error.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// Finite connected simple graph. Vertices are dense ids 0..size()-1.
/// Adjacency is CSR with per-vertex sorted neighbor lists, so neighbor scans
/// are O(deg) and edge membership is O(log deg). Optional string labels give
/// stable external names (e.g. "3/7" for Farey vertices).
class Graph {
public:
  Graph() = default;

  /// Builds from an undirected edge list. Rejects loops, duplicate edges,
  /// out-of-range endpoints and disconnected results.
  static Graph from_edges(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                          std::vector<std::string> labels = {});

  VertexId size() const { return n_; }
  int64_t num_edges() const { return static_cast<int64_t>(adj_.size()) / 2; }

  const VertexId* neighbors_begin(VertexId v) const { return adj_.data() + offsets_[v]; }
  const VertexId* neighbors_end(VertexId v) const { return adj_.data() + offsets_[v + 1]; }
  int32_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(VertexId u, VertexId v) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(VertexId v) const { return labels_[v]; }
  /// Vertex id for a label, or nullopt. Labels are unique when present.
  std::optional<VertexId> find_label(const std::string& label) const;

  void check_vertex(VertexId v) const {
    if (v < 0 || v >= n_) throw InputError("vertex id out of range: " + std::to_string(v));
  }

  /// Iterates undirected edges as (u,v) with u < v, ascending.
  template <typename F>
  void for_each_edge(F&& f) const {
    for (VertexId u = 0; u < n_; ++u)
      for (const VertexId* p = neighbors_begin(u); p != neighbors_end(u); ++p)
        if (*p > u) f(u, *p);
  }

private:
  VertexId n_ = 0;
  std::vector<int64_t> offsets_;  // size n_+1
  std::vector<VertexId> adj_;     // size 2|E|, sorted per vertex
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> label_index_;
};

/// Distances from src to every vertex (graph is connected, so none are -1).
std::vector<int32_t> bfs_distances(const Graph& g, VertexId src);

/// d(u,v) by early-exit BFS. Prefer DistanceOracle for repeated queries.
int32_t distance(const Graph& g, VertexId u, VertexId v);

/// Closed ball {v : d(center,v) <= radius}, ascending vertex ids.
std::vector<VertexId> ball(const Graph& g, VertexId center, int32_t radius);

/// Reusable scratch for truncated BFS: epoch stamps avoid O(V) clears, so a
/// depth-bounded search costs O(|ball|) even on multi-million-vertex graphs.
class BfsScratch {
public:
  explicit BfsScratch(VertexId n) : stamp_(n, 0), dist_(n, 0) {}

  /// Runs BFS from src to depth maxdepth; returns visited vertices in BFS
  /// order. dist_of() is valid for them until the next run.
  const std::vector<VertexId>& run(const Graph& g, VertexId src, int32_t maxdepth);

  /// As run(), but only expands edges that strictly descend `level` (the
  /// caller's distance-to-target array). The visited set is then exactly the
  /// union of geodesic prefixes from src toward the target, so vertices at
  /// BFS depth l are exactly the alpha(l) over geodesics alpha from src.
  const std::vector<VertexId>& run_descending(const Graph& g, VertexId src, int32_t maxdepth,
                                              const std::vector<int32_t>& level);

  int32_t dist_of(VertexId v) const { return stamp_[v] == epoch_ ? dist_[v] : -1; }
  const std::vector<VertexId>& visited() const { return order_; }

private:
  std::vector<uint32_t> stamp_;
  std::vector<int32_t> dist_;
  std::vector<VertexId> order_;
  uint32_t epoch_ = 0;
};

/// Numerator of twice the Gromov product: 2<x,y>_z = d(x,z)+d(y,z)-d(x,y).
/// Kept as an integer so half-integer products stay exact.
struct HalfInteger {
  int64_t twice;
  bool is_integer() const { return twice % 2 == 0; }
  int64_t floor() const { return twice >= 0 ? twice / 2 : (twice - 1) / 2; }
  double value() const { return static_cast<double>(twice) / 2.0; }
};

/// Distance queries with optional all-pairs cache. The cache stores uint16
/// distances for graphs below the vertex cutoff; larger graphs fall back to
/// per-source BFS, with full rows cached for reused sources.
class DistanceOracle {
public:
  static constexpr VertexId kApspCutoff = 20000;

  explicit DistanceOracle(const Graph& g, bool build_apsp = false);

  int32_t operator()(VertexId u, VertexId v) const;
  /// Full distance row from src, cached across calls.
  const std::vector<int32_t>& row(VertexId src) const;
  bool has_apsp() const { return !apsp_.empty(); }

  HalfInteger gromov_product(VertexId x, VertexId y, VertexId z) const;

  const Graph& graph() const { return g_; }

private:
  const Graph& g_;
  std::vector<uint16_t> apsp_;  // n*n when built
  mutable std::unordered_map<VertexId, std::vector<int32_t>> rows_;
};

}  // namespace finehyp
