#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "finehyp/graph.hpp"

namespace finehyp {

/// Simple cycle stored canonically: rotated so the smallest vertex id comes
/// first, oriented so the second entry is the smaller of the two neighbors of
/// the first. The closing edge back to the start is implicit. Length = number
/// of vertices = number of edges.
using Circuit = std::vector<VertexId>;

struct CircuitSet {
  VertexId u = -1, v = -1;  // the edge, u < v
  int32_t bound = 0;        // n
  std::vector<Circuit> circuits;  // canonical forms, sorted
  bool truncated = false;   // count or work cap hit; contents are a prefix
};

struct CircuitCaps {
  int64_t max_count = 1000000;   // stop after this many circuits
  int64_t max_work = 200000000;  // DFS step budget
};

/// All circuits of length <= n through edge e, canonicalized and sorted.
/// A circuit through (u,v) minus that edge is a unique simple path
/// v -> ... -> u, so DFS over those paths enumerates each circuit once.
CircuitSet circuits_through(const Graph& g, VertexId u, VertexId v, int32_t n,
                            const CircuitCaps& caps = {});

/// Count of circuits through (u,v) of length <= n without storing them.
/// Returns (count, truncated); a truncated count is a lower bound.
std::pair<int64_t, bool> count_circuits_through(const Graph& g, VertexId u, VertexId v,
                                                int32_t n, const CircuitCaps& caps = {});

/// Rewrites a circuit to canonical form. Throws InputError if the sequence is
/// not a simple closed walk in g.
Circuit canonical_circuit(const Graph& g, const Circuit& c);

struct FinenessProfile {
  int32_t n = 0;
  // Aligned with Graph::for_each_edge order.
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<int64_t> counts;
  std::vector<bool> edge_truncated;
  std::vector<bool> interior;
  int64_t sup = 0;           // max count over all edges (lower bound if truncated)
  int64_t interior_sup = 0;  // max over interior edges only
  bool any_truncated = false;
  bool has_interior = false;  // false when no edge qualifies as interior
};

/// |C(e,n)| for every edge plus the sup. `frontier` lists vertices that may
/// gain neighbors in the ambient infinite graph; an edge counts as interior
/// when the ball of radius n around it avoids the frontier, in which case its
/// count is exact for the ambient graph rather than a lower bound. An empty
/// frontier means the graph is complete as given (every edge interior).
FinenessProfile fineness_profile(const Graph& g, int32_t n, const CircuitCaps& caps = {},
                                 const std::vector<VertexId>& frontier = {});

/// CSV rows: edge_u,edge_v,n,count,truncated,interior
void write_fineness_csv(const FinenessProfile& p, std::ostream& out);

/// Degree-1 vertices; equals the truncation frontier for the generated tree
/// families (regular and Bass-Serre trees).
std::vector<VertexId> leaf_frontier(const Graph& g);

}  // namespace finehyp
