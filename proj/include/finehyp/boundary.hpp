#pragma once

#include <unordered_map>
#include <vector>

#include "finehyp/geodesics.hpp"
#include "finehyp/graph.hpp"
#include "finehyp/measure.hpp"

namespace finehyp {

/// Desk-scale stand-in for a boundary point: geodesic queries are aimed at a
/// far-away target instead of a limit. Certified only while the queried
/// segments stay far from both the target and the truncation frontier; the
/// certification inequalities below are checked on every use.
struct BoundaryProxy {
  enum class Kind { FarVertex, Ray };
  Kind kind = Kind::FarVertex;
  VertexId origin = -1;  // sources must stay within validity_radius of this
  VertexId target = -1;  // geodesics are computed toward this vertex
  Path ray;              // Ray kind: geodesic path, ray[0] = origin, back() = target
  int32_t validity_radius = 0;
  int64_t origin_target_dist = 0;

  int64_t ray_length() const { return static_cast<int64_t>(ray.size()) - 1; }
  /// Checks the (l,k) envelope: FarVertex needs d(origin,target) >=
  /// validity_radius + l + 2k; Ray needs length >= l + 2k.
  bool certified_for(int64_t l, int64_t k) const;
};

BoundaryProxy make_far_proxy(const Graph& g, VertexId origin, VertexId target,
                             int32_t validity_radius);
/// The path must be geodesic (verified); it anchors the proxy at ray[0].
BoundaryProxy make_ray_proxy(const Graph& g, Path ray, int32_t validity_radius);

/// Caches BFS distance rows (keyed by source) and scratch space so repeated
/// shadow/zeta queries against the same proxies stay near output-sensitive
/// cost. Rows are O(V) ints each; callers control the cache lifetime.
class ShadowContext {
public:
  explicit ShadowContext(const Graph& g) : g_(g), scratch_(g.size()) {}

  const Graph& graph() const { return g_; }
  const std::vector<int32_t>& row(VertexId src);
  /// Exact d(x,y) via depth-capped BFS; cap must be >= the true distance
  /// (callers derive it from certification radii). O(ball) not O(V).
  int32_t local_distance(VertexId x, VertexId y, int32_t cap);

  BfsScratch& scratch() { return scratch_; }

private:
  const Graph& g_;
  BfsScratch scratch_;
  std::unordered_map<VertexId, std::vector<int32_t>> rows_;
};

/// S(x,z,l,k): the vertices alpha(l) over geodesics alpha from any x' with
/// d(x',x) <= k toward the proxy target. Sorted ascending. Computed per x' by
/// walking the geodesic cone (descending the distance-to-target gradient) to
/// depth l, which visits exactly the geodesic prefixes.
std::vector<VertexId> shadow(ShadowContext& ctx, VertexId x, const BoundaryProxy& z,
                             int32_t l, int32_t k);

/// Uniform measure xi_S on a nonempty shadow (or any vertex set).
inline VertexMeasure xi(const std::vector<VertexId>& s) { return VertexMeasure::uniform(s); }

/// zeta^n_{x,z} = (1/n) * sum_{k=n+1}^{2n} xi_{S(x,z,4n,k)}, exact.
VertexMeasure zeta(ShadowContext& ctx, VertexId x, const BoundaryProxy& z, int32_t n);

struct LinBoundResult {
  int64_t size = 0;
  int64_t analytic_bound = 0;
  bool ok = false;
};

/// Linear shadow bound: |S(x,z,l,k)| against the window-plus-circuit-cover
/// estimate (2(k+delta)+1) + 2(k+delta)*M6d*6*delta. Requires l > k+delta.
/// M6d is the fineness sup at n = 6*delta; a lower bound for M6d keeps the
/// check conservative (smaller analytic bound).
LinBoundResult lin_bound_check(ShadowContext& ctx, VertexId x, const BoundaryProxy& z,
                               int32_t l, int32_t k, int32_t delta, int64_t m6d);

struct AveDeficiencyResult {
  Rational value;     // ||zeta^n_x - zeta^n_x2||_1, exact
  double bound = 0;   // 2(1-(3Cn)^(-2d/n)), display only
  bool ok = false;    // exact comparison (1-value/2)^n (3Cn)^(2d) >= 1
  int32_t d = 0;      // d(x,x2)
};

/// Averaging decay: compares the exact l1 difference of zeta measures against
/// the analytic decay bound. Requires n >= d(x,x2) + delta. The pass/fail
/// verdict is computed in exact rational arithmetic (no float rounding): for
/// value < 2, value <= 2(1-(3Cn)^(-2d/n)) iff (1-value/2)^n (3Cn)^(2d) >= 1.
AveDeficiencyResult ave_deficiency(ShadowContext& ctx, VertexId x, VertexId x2,
                                   const BoundaryProxy& z, int32_t n, const Rational& c,
                                   int32_t delta);

/// Membership in T(x,y) for a vertex w: some geodesic from x to w passes
/// through y, equivalently d(x,y) + d(y,w) = d(x,w). Exact; `cap` is accepted
/// for interface parity but the identity never needs enumeration.
bool in_T(const Graph& g, VertexId x, VertexId y, VertexId w, int64_t cap = kDefaultGeodesicCap);

/// The candidates w such that no geodesic from x to w meets A \ {x}.
std::vector<VertexId> m_neighborhood(const Graph& g, VertexId x, const std::vector<VertexId>& a,
                                     const std::vector<VertexId>& candidates,
                                     int64_t cap = kDefaultGeodesicCap);

/// Exact integer power of a rational, e >= 0.
Rational rational_pow(const Rational& base, int64_t e);

}  // namespace finehyp
