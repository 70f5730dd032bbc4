#include "finehyp/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace finehyp {

bool BoundaryProxy::certified_for(int64_t l, int64_t k) const {
  if (l < 0 || k < 0) return false;
  if (kind == Kind::FarVertex) return origin_target_dist >= validity_radius + l + 2 * k;
  return ray_length() >= l + 2 * k;
}

BoundaryProxy make_far_proxy(const Graph& g, VertexId origin, VertexId target,
                             int32_t validity_radius) {
  g.check_vertex(origin);
  g.check_vertex(target);
  if (validity_radius < 0) throw InputError("validity_radius must be nonnegative");
  if (origin == target) throw InputError("far proxy target must differ from origin");
  BoundaryProxy z;
  z.kind = BoundaryProxy::Kind::FarVertex;
  z.origin = origin;
  z.target = target;
  z.validity_radius = validity_radius;
  z.origin_target_dist = distance(g, origin, target);
  return z;
}

BoundaryProxy make_ray_proxy(const Graph& g, Path ray, int32_t validity_radius) {
  if (ray.size() < 2) throw InputError("ray proxy needs a path of length >= 1");
  if (validity_radius < 0) throw InputError("validity_radius must be nonnegative");
  if (!is_geodesic(g, ray)) throw InputError("ray proxy path is not geodesic");
  BoundaryProxy z;
  z.kind = BoundaryProxy::Kind::Ray;
  z.origin = ray.front();
  z.target = ray.back();
  z.origin_target_dist = static_cast<int64_t>(ray.size()) - 1;
  z.ray = std::move(ray);
  z.validity_radius = validity_radius;
  return z;
}

const std::vector<int32_t>& ShadowContext::row(VertexId src) {
  g_.check_vertex(src);
  auto it = rows_.find(src);
  if (it == rows_.end()) it = rows_.emplace(src, bfs_distances(g_, src)).first;
  return it->second;
}

int32_t ShadowContext::local_distance(VertexId x, VertexId y, int32_t cap) {
  g_.check_vertex(y);
  scratch_.run(g_, x, cap);
  int32_t d = scratch_.dist_of(y);
  if (d < 0) throw InputError("local_distance cap too small for the queried pair");
  return d;
}

namespace {

void check_shadow_certified(ShadowContext& ctx, VertexId x, const BoundaryProxy& z, int32_t l,
                            int32_t k) {
  const Graph& g = ctx.graph();
  g.check_vertex(x);
  g.check_vertex(z.origin);
  g.check_vertex(z.target);
  if (l < 0 || k < 0) throw InputError("shadow needs l, k >= 0");
  if (!z.certified_for(l, k)) {
    std::ostringstream os;
    os << "proxy not certified for (l=" << l << ", k=" << k << "): ";
    if (z.kind == BoundaryProxy::Kind::FarVertex)
      os << "d(origin,target)=" << z.origin_target_dist << " < validity_radius+l+2k="
         << z.validity_radius + l + 2 * static_cast<int64_t>(k);
    else
      os << "ray length " << z.ray_length() << " < l+2k=" << l + 2 * static_cast<int64_t>(k);
    throw CertificationError(os.str());
  }
  // x itself must sit inside the proxy's validity ball.
  ctx.scratch().run(g, z.origin, z.validity_radius);
  if (x != z.origin && ctx.scratch().dist_of(x) < 0)
    throw CertificationError("shadow source x is outside the proxy validity ball (radius " +
                             std::to_string(z.validity_radius) + ")");
}

}  // namespace

std::vector<VertexId> shadow(ShadowContext& ctx, VertexId x, const BoundaryProxy& z, int32_t l,
                             int32_t k) {
  check_shadow_certified(ctx, x, z, l, k);
  const Graph& g = ctx.graph();
  const std::vector<int32_t>& dt = ctx.row(z.target);

  // B(x,k) first; the scratch is reused for cone walks afterwards.
  std::vector<VertexId> sources = ctx.scratch().run(g, x, k);

  std::vector<VertexId> out;
  for (VertexId src : sources) {
    if (dt[src] < l)
      throw CertificationError("shadow would overshoot the proxy target from a source");
    const std::vector<VertexId>& cone = ctx.scratch().run_descending(g, src, l, dt);
    for (VertexId w : cone)
      if (ctx.scratch().dist_of(w) == l) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw InvariantViolation("shadow computed empty; geodesics must exist");
  return out;
}

VertexMeasure zeta(ShadowContext& ctx, VertexId x, const BoundaryProxy& z, int32_t n) {
  if (n < 1) throw InputError("zeta needs n >= 1");
  std::vector<Rational> coeffs;
  std::vector<VertexMeasure> parts;
  Rational w(1, n);
  for (int32_t k = n + 1; k <= 2 * n; ++k) {
    coeffs.push_back(w);
    parts.push_back(xi(shadow(ctx, x, z, 4 * n, k)));
  }
  return convex_combination(coeffs, parts);
}

LinBoundResult lin_bound_check(ShadowContext& ctx, VertexId x, const BoundaryProxy& z,
                               int32_t l, int32_t k, int32_t delta, int64_t m6d) {
  if (delta < 1) throw InputError("lin_bound_check needs delta >= 1");
  if (m6d < 0) throw InputError("lin_bound_check needs M6d >= 0");
  if (l <= k + delta)
    throw InputError("lin_bound_check requires l > k + delta (got l=" + std::to_string(l) +
                     ", k+delta=" + std::to_string(k + delta) + ")");
  LinBoundResult r;
  r.size = static_cast<int64_t>(shadow(ctx, x, z, l, k).size());
  int64_t kd = static_cast<int64_t>(k) + delta;
  r.analytic_bound = (2 * kd + 1) + 2 * kd * m6d * 6 * delta;
  r.ok = r.size <= r.analytic_bound;
  return r;
}

Rational rational_pow(const Rational& base, int64_t e) {
  if (e < 0) throw InputError("rational_pow needs e >= 0");
  Rational acc = 1, b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

AveDeficiencyResult ave_deficiency(ShadowContext& ctx, VertexId x, VertexId x2,
                                   const BoundaryProxy& z, int32_t n, const Rational& c,
                                   int32_t delta) {
  if (c <= 0) throw InputError("ave_deficiency needs C > 0");
  if (delta < 1) throw InputError("ave_deficiency needs delta >= 1");
  if (n < 1) throw InputError("ave_deficiency needs n >= 1");
  // Both x and x2 lie in the proxy's validity ball, so d(x,x2) is bounded by
  // twice the radius; the local BFS cap follows.
  int32_t d = ctx.local_distance(x, x2, 2 * z.validity_radius + 1);
  if (n < d + delta)
    throw InputError("ave_deficiency requires n >= d + delta (got n=" + std::to_string(n) +
                     ", d+delta=" + std::to_string(d + delta) + ")");

  AveDeficiencyResult r;
  r.d = d;
  r.value = l1_distance(zeta(ctx, x, z, n), zeta(ctx, x2, z, n));

  double cn3 = 3.0 * static_cast<double>(c) * static_cast<double>(n);
  r.bound = 2.0 * (1.0 - std::pow(cn3, -2.0 * d / n));

  if (r.value >= 2) {
    r.ok = false;  // bound is strictly below 2
  } else {
    // value <= 2(1-(3Cn)^(-2d/n))  <=>  (1-value/2)^n * (3Cn)^(2d) >= 1.
    Rational lhs = rational_pow(1 - r.value / 2, n) * rational_pow(3 * c * n, 2 * d);
    r.ok = lhs >= 1;
  }
  return r;
}

bool in_T(const Graph& g, VertexId x, VertexId y, VertexId w, int64_t cap) {
  (void)cap;  // membership reduces to the exact distance identity
  g.check_vertex(x);
  g.check_vertex(y);
  g.check_vertex(w);
  return distance(g, x, y) + distance(g, y, w) == distance(g, x, w);
}

std::vector<VertexId> m_neighborhood(const Graph& g, VertexId x, const std::vector<VertexId>& a,
                                     const std::vector<VertexId>& candidates, int64_t cap) {
  (void)cap;
  g.check_vertex(x);
  std::vector<VertexId> blockers;
  for (VertexId b : a) {
    g.check_vertex(b);
    if (b != x) blockers.push_back(b);
  }
  std::vector<int32_t> dx = bfs_distances(g, x);
  std::vector<std::vector<int32_t>> db;
  db.reserve(blockers.size());
  for (VertexId b : blockers) db.push_back(bfs_distances(g, b));

  std::vector<VertexId> out;
  for (VertexId w : candidates) {
    g.check_vertex(w);
    bool blocked = false;
    for (size_t i = 0; i < blockers.size() && !blocked; ++i)
      blocked = (dx[blockers[i]] + db[i][w] == dx[w]);
    if (!blocked) out.push_back(w);
  }
  return out;
}

}  // namespace finehyp
