#include "finehyp/fineness.hpp"

#include <algorithm>
#include <ostream>

namespace finehyp {

namespace {

// Bounded DFS over simple paths [u, v, ...] that extend the edge (u,v);
// closing back into u yields each circuit of length <= n exactly once.
// dist-to-u (in `scratch`) prunes branches that cannot return in budget.
// `on_path` is caller-owned, must be all-zero on entry and is restored to
// all-zero on exit, including cap-hit unwinds.
struct CircuitDfs {
  const Graph& g;
  VertexId u, v;
  int32_t n;
  const CircuitCaps& caps;
  const BfsScratch& scratch;
  std::vector<char>& on_path;
  std::vector<Circuit>* store;  // null = count only

  int64_t work = 0;
  int64_t count = 0;
  bool truncated = false;
  Circuit path = {};

  void run() {
    path.assign({u, v});
    on_path[u] = on_path[v] = 1;
    extend();
    on_path[u] = on_path[v] = 0;
  }

  // Returns false when a cap was hit (marks already unwound by callers).
  bool extend() {
    VertexId cur = path.back();
    int32_t len = static_cast<int32_t>(path.size()) - 1;  // edges used incl. (u,v)
    for (const VertexId* p = g.neighbors_begin(cur); p != g.neighbors_end(cur); ++p) {
      VertexId w = *p;
      if (++work > caps.max_work) {
        truncated = true;
        return false;
      }
      if (w == u) {
        if (len >= 2) {  // closing edge makes a cycle of length len+1 >= 3
          if (count >= caps.max_count) {
            truncated = true;
            return false;
          }
          ++count;
          if (store) store->push_back(path);
        }
        continue;
      }
      if (on_path[w]) continue;
      int32_t du = scratch.dist_of(w);
      if (du < 0 || len + 1 + du > n) continue;  // cannot close within n edges
      path.push_back(w);
      on_path[w] = 1;
      bool ok = extend();
      on_path[w] = 0;
      path.pop_back();
      if (!ok) return false;
    }
    return true;
  }
};

void check_circuit_args(const Graph& g, VertexId u, VertexId v, int32_t n) {
  if (!g.has_edge(u, v)) throw InputError("circuits_through: not an edge");
  if (n < 3) throw InputError("circuits_through needs n >= 3");
}

}  // namespace

CircuitSet circuits_through(const Graph& g, VertexId u, VertexId v, int32_t n,
                            const CircuitCaps& caps) {
  check_circuit_args(g, u, v, n);
  if (u > v) std::swap(u, v);

  CircuitSet out;
  out.u = u;
  out.v = v;
  out.bound = n;

  BfsScratch scratch(g.size());
  scratch.run(g, u, n - 1);
  std::vector<char> on_path(g.size(), 0);
  CircuitDfs dfs{g, u, v, n, caps, scratch, on_path, &out.circuits};
  dfs.run();
  out.truncated = dfs.truncated;
  for (Circuit& c : out.circuits) c = canonical_circuit(g, c);
  std::sort(out.circuits.begin(), out.circuits.end());
  return out;
}

std::pair<int64_t, bool> count_circuits_through(const Graph& g, VertexId u, VertexId v,
                                                int32_t n, const CircuitCaps& caps) {
  check_circuit_args(g, u, v, n);
  if (u > v) std::swap(u, v);
  BfsScratch scratch(g.size());
  scratch.run(g, u, n - 1);
  std::vector<char> on_path(g.size(), 0);
  CircuitDfs dfs{g, u, v, n, caps, scratch, on_path, nullptr};
  dfs.run();
  return {dfs.count, dfs.truncated};
}

Circuit canonical_circuit(const Graph& g, const Circuit& c) {
  if (c.size() < 3) throw InputError("circuit needs at least 3 vertices");
  size_t m = c.size();
  for (size_t i = 0; i < m; ++i) {
    g.check_vertex(c[i]);
    if (!g.has_edge(c[i], c[(i + 1) % m])) throw InputError("circuit has a non-edge step");
  }
  std::vector<VertexId> sorted(c);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("circuit repeats a vertex");

  size_t pos = std::min_element(c.begin(), c.end()) - c.begin();
  Circuit fwd(m), rev(m);
  for (size_t i = 0; i < m; ++i) fwd[i] = c[(pos + i) % m];
  for (size_t i = 0; i < m; ++i) rev[i] = c[(pos + m - i) % m];
  return fwd[1] <= rev[1] ? fwd : rev;
}

FinenessProfile fineness_profile(const Graph& g, int32_t n, const CircuitCaps& caps,
                                 const std::vector<VertexId>& frontier) {
  if (n < 3) throw InputError("fineness_profile needs n >= 3");
  FinenessProfile prof;
  prof.n = n;

  // Distance to the nearest frontier vertex, computed to depth n+1; beyond
  // that only "far" matters. Empty frontier = everything far.
  std::vector<int32_t> dist_frontier;
  if (!frontier.empty()) {
    dist_frontier.assign(g.size(), -1);
    std::vector<VertexId> cur, next;
    for (VertexId f : frontier) {
      g.check_vertex(f);
      if (dist_frontier[f] < 0) {
        dist_frontier[f] = 0;
        cur.push_back(f);
      }
    }
    int32_t d = 0;
    while (!cur.empty() && d <= n) {
      ++d;
      next.clear();
      for (VertexId a : cur)
        for (const VertexId* p = g.neighbors_begin(a); p != g.neighbors_end(a); ++p)
          if (dist_frontier[*p] < 0) {
            dist_frontier[*p] = d;
            next.push_back(*p);
          }
      cur.swap(next);
    }
  }
  auto far_from_frontier = [&](VertexId w) {
    if (frontier.empty()) return true;
    return dist_frontier[w] < 0 || dist_frontier[w] > n;
  };

  BfsScratch scratch(g.size());
  std::vector<char> on_path(g.size(), 0);
  g.for_each_edge([&](VertexId u, VertexId v) {
    scratch.run(g, u, n - 1);
    CircuitDfs dfs{g, u, v, n, caps, scratch, on_path, nullptr};
    dfs.run();

    bool inter = far_from_frontier(u) && far_from_frontier(v);
    prof.edges.emplace_back(u, v);
    prof.counts.push_back(dfs.count);
    prof.edge_truncated.push_back(dfs.truncated);
    prof.interior.push_back(inter);
    prof.any_truncated = prof.any_truncated || dfs.truncated;
    prof.sup = std::max(prof.sup, dfs.count);
    if (inter) {
      prof.has_interior = true;
      prof.interior_sup = std::max(prof.interior_sup, dfs.count);
    }
  });
  return prof;
}

void write_fineness_csv(const FinenessProfile& p, std::ostream& out) {
  out << "edge_u,edge_v,n,count,truncated,interior\n";
  for (size_t i = 0; i < p.edges.size(); ++i)
    out << p.edges[i].first << ',' << p.edges[i].second << ',' << p.n << ',' << p.counts[i]
        << ',' << (p.edge_truncated[i] ? 1 : 0) << ',' << (p.interior[i] ? 1 : 0) << '\n';
}

std::vector<VertexId> leaf_frontier(const Graph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.size(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

}  // namespace finehyp
