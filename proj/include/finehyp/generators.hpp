#pragma once

#include "finehyp/graph.hpp"

namespace finehyp {

/// Rooted tree in which the root has `degree` children and every other
/// internal vertex has degree-1 children; all leaves sit at depth `radius`.
/// Vertex 0 is the root and numbering is breadth-first, so the layout is
/// deterministic and reproducible across runs. Unlabeled.
Graph regular_tree(int degree, int radius);

/// Farey graph truncation: vertices are 1/0 plus all reduced p/q with
/// 1 <= q <= max_q and |p| <= max_q; p/q ~ r/s iff |p*s - q*r| = 1.
/// Vertices are labeled "p/q" and ordered 1/0 first, then by (q, p).
Graph farey_graph(int max_q);

/// Simple cycle on n >= 3 vertices, 0-1-...-(n-1)-0.
Graph cycle_graph(int n);

/// Number of vertices regular_tree(degree, radius) will produce, so callers
/// can reject absurd sizes before allocating.
int64_t regular_tree_size(int degree, int radius);

}  // namespace finehyp
