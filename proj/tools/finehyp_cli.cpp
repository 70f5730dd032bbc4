#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "finehyp/action.hpp"
#include "finehyp/boundary.hpp"
#include "finehyp/fineness.hpp"
#include "finehyp/generators.hpp"
#include "finehyp/geodesics.hpp"
#include "finehyp/graph.hpp"
#include "finehyp/graph_io.hpp"
#include "finehyp/group.hpp"
#include "finehyp/measure.hpp"

namespace {

using namespace finehyp;

constexpr const char* kVersion = "finehyp 1.0.0";

// Stable CI contract: 0 success, 2 certification/truncation failure (also
// covers rejected input), 3 invariant violation (a computed value exceeded
// its proven bound, or an internal consistency error).
constexpr int kExitOk = 0;
constexpr int kExitCertification = 2;
constexpr int kExitInvariant = 3;

int64_t parse_i64(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    int64_t v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError("expected an integer for " + what + ", got '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

Rational parse_rational(const std::string& s, const std::string& what) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_i64(s, what));
  int64_t num = parse_i64(s.substr(0, slash), what);
  int64_t den = parse_i64(s.substr(slash + 1), what);
  if (den <= 0) throw InputError(what + " must have a positive denominator: " + s);
  return Rational(num, den);
}

std::vector<int32_t> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int32_t> out;
  for (const auto& part : split(s, ',')) out.push_back((int32_t)parse_i64(part, what));
  if (out.empty()) throw InputError(what + " must be nonempty");
  return out;
}

std::vector<std::pair<VertexId, VertexId>> parse_pairs(const std::string& s) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& part : split(s, ',')) {
    auto colon = part.find(':');
    if (colon == std::string::npos)
      throw InputError("pair must be <x>:<x2>, got '" + part + "'");
    out.emplace_back((VertexId)parse_i64(part.substr(0, colon), "pair"),
                     (VertexId)parse_i64(part.substr(colon + 1), "pair"));
  }
  return out;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Runs body(index, worker) over [0, count) on `jobs` threads. Work order is
// nondeterministic but callers index results by item, so output order is not.
template <typename F>
void parallel_for(int jobs, int64_t count, F&& body) {
  jobs = (int)std::min<int64_t>(std::max(1, jobs), std::max<int64_t>(1, count));
  if (jobs == 1) {
    for (int64_t i = 0; i < count; ++i) body(i, 0);
    return;
  }
  std::atomic<int64_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex err_mu;
  std::exception_ptr err;
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      while (!stop.load()) {
        int64_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          body(i, w);
        } catch (...) {
          std::lock_guard<std::mutex> lk(err_mu);
          if (!err) err = std::current_exception();
          stop.store(true);
          return;
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (err) std::rethrow_exception(err);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open output file: " + path);
  return out;
}

// Longest geodesic found by a double BFS sweep (exact on trees, a genuine
// geodesic on any graph). Ties break toward the smallest vertex id, so the
// result is a pure function of the graph.
Path longest_geodesic(const Graph& g) {
  auto farthest = [&](VertexId src, const std::vector<int32_t>& dist) {
    VertexId best = src;
    for (VertexId v = 0; v < g.size(); ++v)
      if (dist[v] > dist[best]) best = v;
    return best;
  };
  std::vector<int32_t> d0 = bfs_distances(g, 0);
  VertexId u = farthest(0, d0);
  std::vector<int32_t> du = bfs_distances(g, u);
  VertexId w = farthest(u, du);
  Path path;
  for (VertexId cur = w; cur != u;) {
    path.push_back(cur);
    VertexId next = -1;
    for (VertexId nb = 0; nb < g.size(); ++nb)
      if (du[nb] == du[cur] - 1 && g.has_edge(cur, nb)) {
        next = nb;
        break;
      }
    cur = next;
  }
  path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

struct ProxyConfig {
  std::string spec;
  VertexId origin = 0;
  int32_t vr = 0;
};

// "far:<vertex>" anchors at --origin; "ray:<len>" takes the first <len> edges
// of the longest geodesic found by a double sweep and anchors at its start,
// ignoring --origin.
BoundaryProxy resolve_proxy(const Graph& g, const ProxyConfig& pc) {
  auto colon = pc.spec.find(':');
  std::string kind = pc.spec.substr(0, colon == std::string::npos ? pc.spec.size() : colon);
  std::string arg = colon == std::string::npos ? "" : pc.spec.substr(colon + 1);
  if (kind == "far") {
    VertexId target = (VertexId)parse_i64(arg, "far proxy target");
    return make_far_proxy(g, pc.origin, target, pc.vr);
  }
  if (kind == "ray") {
    int64_t len = parse_i64(arg, "ray length");
    Path longest = longest_geodesic(g);
    if ((int64_t)longest.size() <= len)
      throw InputError("no geodesic of length " + std::to_string(len) +
                       " found (longest sweep geodesic has length " +
                       std::to_string(longest.size() - 1) + ")");
    longest.resize(len + 1);
    return make_ray_proxy(g, longest, pc.vr);
  }
  throw InputError("proxy spec must be ray:<len> or far:<vertex>, got '" + pc.spec + "'");
}

// ---------------------------------------------------------------------------
// gen

struct GenOpts {
  std::string family;
  std::string out;
  std::string action_out;
};

int cmd_gen(const GenOpts& o) {
  auto colon = o.family.find(':');
  std::string name = o.family.substr(0, colon == std::string::npos ? o.family.size() : colon);
  std::vector<std::string> args;
  if (colon != std::string::npos) args = split(o.family.substr(colon + 1), ',');
  auto want = [&](size_t n) {
    if (args.size() != n)
      throw InputError("family " + name + " takes " + std::to_string(n) + " parameter(s)");
  };
  Graph g;
  std::unique_ptr<BassSerreAction> action;
  if (name == "tree") {
    want(2);
    g = regular_tree((int)parse_i64(args[0], "degree"), (int)parse_i64(args[1], "radius"));
  } else if (name == "farey") {
    want(1);
    g = farey_graph((int)parse_i64(args[0], "max denominator"));
  } else if (name == "cycle") {
    want(1);
    g = cycle_graph((int)parse_i64(args[0], "cycle length"));
  } else if (name == "bass-serre") {
    want(3);
    action = std::make_unique<BassSerreAction>((int)parse_i64(args[0], "p"),
                                               (int)parse_i64(args[1], "q"),
                                               (int)parse_i64(args[2], "radius"));
    g = action->graph();
  } else {
    throw InputError("unknown family '" + name +
                     "' (expected tree:<deg>,<r> | farey:<q> | cycle:<n> | bass-serre:<p>,<q>,<r>)");
  }
  save_graph_file(g, o.out);
  std::cout << "wrote " << o.out << ": " << g.size() << " vertices, " << g.num_edges()
            << " edges\n";
  if (action) {
    std::string apath = o.action_out.empty() ? o.out + ".action" : o.action_out;
    save_action_file(*action, apath);
    std::cout << "wrote " << apath << ": action of Z/" << action->group().p() << " * Z/"
              << action->group().q() << "\n";
  } else if (!o.action_out.empty()) {
    throw InputError("--action-out only applies to the bass-serre family");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeOpts {
  std::string graph;
  int32_t n = 6;
  VertexId base = 0;
  int32_t radius = -1;
  int64_t cap = kDefaultGeodesicCap;
  bool cache_apsp = false;
  std::string frontier = "leaves";
};

int cmd_analyze(const AnalyzeOpts& o) {
  Graph g = load_graph_file(o.graph);
  std::cout << "graph: " << o.graph << " (" << g.size() << " vertices, " << g.num_edges()
            << " edges)\n";

  DistanceOracle oracle(g, o.cache_apsp);
  int32_t radius = o.radius >= 0 ? o.radius : g.size();
  ThinnessResult thin = thinness_defect(oracle, o.base, radius, o.cap);
  std::cout << "thinness defect D = " << thin.defect << " (delta <= " << thin.delta() << ")"
            << (thin.truncated ? " [truncated: lower bound only]" : "") << "\n";

  std::vector<VertexId> frontier;
  if (o.frontier == "leaves") {
    frontier = leaf_frontier(g);
  } else if (o.frontier != "none") {
    throw InputError("--frontier must be leaves or none");
  }
  CircuitCaps caps;
  caps.max_count = o.cap;
  FinenessProfile prof = fineness_profile(g, o.n, caps, frontier);
  int64_t truncated_edges = std::count(prof.edge_truncated.begin(), prof.edge_truncated.end(), true);
  std::cout << "fineness sup (n = " << o.n << "): " << prof.sup << "\n";
  if (prof.has_interior)
    std::cout << "interior sup: " << prof.interior_sup << "\n";
  else
    std::cout << "interior sup: n/a (no interior edges at this radius)\n";
  std::cout << "truncated edges: " << truncated_edges << "\n";

  bool clean = !thin.truncated && !prof.any_truncated;
  std::cout << (clean ? "all counts exact\n" : "some counts truncated\n");
  return clean ? kExitOk : kExitCertification;
}

// ---------------------------------------------------------------------------
// decay

struct DecayOpts {
  std::string graph;
  ProxyConfig proxy;
  std::string pairs;
  std::string n_grid;
  std::string c = "1";
  int32_t delta = 1;
  std::string out;
  int jobs = 1;
  int64_t seed = 0;
  bool cache_apsp = false;
};

int cmd_decay(const DecayOpts& o) {
  Graph g = load_graph_file(o.graph);
  auto pairs = parse_pairs(o.pairs);
  auto grid = parse_int_list(o.n_grid, "n-grid");
  Rational c = parse_rational(o.c, "C");
  BoundaryProxy proxy = resolve_proxy(g, o.proxy);
  if (pairs.empty()) throw InputError("at least one pair is required");

  struct Cell {
    AveDeficiencyResult res;
  };
  int64_t count = (int64_t)pairs.size() * (int64_t)grid.size();
  std::vector<Cell> cells(count);
  int jobs = std::max(1, o.jobs);
  std::vector<std::unique_ptr<ShadowContext>> ctxs;
  for (int w = 0; w < jobs; ++w) {
    ctxs.push_back(std::make_unique<ShadowContext>(g));
    if (o.cache_apsp) {
      ctxs.back()->row(proxy.origin);
      for (const auto& [x, x2] : pairs) {
        ctxs.back()->row(x);
        ctxs.back()->row(x2);
      }
    }
  }
  parallel_for(jobs, count, [&](int64_t i, int w) {
    const auto& [x, x2] = pairs[i / grid.size()];
    int32_t n = grid[i % grid.size()];
    cells[i].res = ave_deficiency(*ctxs[w], x, x2, proxy, n, c, o.delta);
  });

  std::ofstream out = open_out(o.out);
  out << "# " << kVersion << "\n";
  out << "# command: decay\n";
  out << "# graph: " << o.graph << "\n";
  out << "# proxy: " << o.proxy.spec << "\n";
  out << "# origin: " << o.proxy.origin << "\n";
  out << "# vr: " << o.proxy.vr << "\n";
  out << "# pairs: " << o.pairs << "\n";
  out << "# n-grid: " << o.n_grid << "\n";
  out << "# c: " << rational_str(c) << "\n";
  out << "# delta: " << o.delta << "\n";
  out << "# seed: " << o.seed << "\n";
  out << "graph,proxy,x,x2,d,n,C,value_num,value_den,bound,pass\n";
  bool all_pass = true;
  for (size_t p = 0; p < pairs.size(); ++p) {
    for (size_t j = 0; j < grid.size(); ++j) {
      const auto& r = cells[p * grid.size() + j].res;
      all_pass = all_pass && r.ok;
      out << o.graph << ',' << o.proxy.spec << ',' << pairs[p].first << ',' << pairs[p].second
          << ',' << r.d << ',' << grid[j] << ',' << rational_str(c) << ','
          << boost::multiprecision::numerator(r.value) << ','
          << boost::multiprecision::denominator(r.value) << ',' << format_double(r.bound) << ','
          << (r.ok ? 1 : 0) << "\n";
    }
  }
  for (size_t j = 0; j < grid.size(); ++j) {
    Rational maxval = 0;
    for (size_t p = 0; p < pairs.size(); ++p)
      maxval = std::max(maxval, cells[p * grid.size() + j].res.value);
    out << o.graph << ',' << o.proxy.spec << ",SUMMARY,,," << grid[j] << ',' << rational_str(c)
        << ',' << boost::multiprecision::numerator(maxval) << ','
        << boost::multiprecision::denominator(maxval) << ",,\n";
  }
  out.flush();
  if (!out) throw InputError("failed writing " + o.out);
  return all_pass ? kExitOk : kExitInvariant;
}

// ---------------------------------------------------------------------------
// amenability

struct AmenabilityOpts {
  std::string graph;
  std::string action;
  ProxyConfig proxy;
  std::string e;
  int32_t n = 0;
  std::string y = "singleton";
  std::string targets;
  std::string epsilon = "1/1000";
  std::string out;
  int64_t seed = 0;
};

YSpace parse_yspace(const FreeProduct& grp, const std::string& spec) {
  if (spec == "singleton") return YSpace::singleton();
  if (spec.rfind("perm:", 0) != 0)
    throw InputError("--y must be singleton or perm:<letter>=<perm>;... , got '" + spec + "'");
  YSpace ys;
  ys.size = -1;
  for (const auto& part : split(spec.substr(5), ';')) {
    auto eq = part.find('=');
    if (eq != 1) throw InputError("y permutation must be <letter>=<i,j,...>, got '" + part + "'");
    char letter = part[0];
    std::vector<int> perm;
    for (const auto& img : split(part.substr(2), ','))
      perm.push_back((int)parse_i64(img, "y permutation"));
    if (ys.size < 0) ys.size = (int)perm.size();
    ys.gen_perms[letter] = std::move(perm);
  }
  if (ys.size <= 0) throw InputError("y permutation spec is empty");
  ys.validate(grp);
  return ys;
}

int cmd_amenability(const AmenabilityOpts& o) {
  Graph g = load_graph_file(o.graph);
  auto ad = load_action_file(o.action, g);
  const FreeProduct& grp = ad->group();

  // The proxy fixes the basepoint; targets are the moving coordinate. A ray
  // spec is reduced to far(ray front -> ray back) so translated targets stay
  // anchored at the same basepoint.
  BoundaryProxy base = resolve_proxy(g, o.proxy);
  VertexId origin = base.origin;
  VertexId base_target =
      base.kind == BoundaryProxy::Kind::FarVertex ? base.target : base.ray.back();
  std::vector<int32_t> targets =
      o.targets.empty() ? std::vector<int32_t>{base_target} : parse_int_list(o.targets, "targets");

  std::vector<GroupElement> e_set;
  for (const auto& word : split(o.e, ',')) e_set.push_back(grp.parse(word));
  if (e_set.empty()) throw InputError("--e must list at least one group element");
  YSpace ys = parse_yspace(grp, o.y);
  Rational epsilon = parse_rational(o.epsilon, "epsilon");

  ShadowContext ctx(g);
  std::map<VertexId, VertexMeasure> zetas;
  auto zeta_at = [&](VertexId target) -> const VertexMeasure& {
    auto it = zetas.find(target);
    if (it == zetas.end()) {
      BoundaryProxy z = make_far_proxy(g, origin, target, o.proxy.vr);
      it = zetas.emplace(target, zeta(ctx, origin, z, o.n)).first;
    }
    return it->second;
  };
  for (VertexId t : targets) {
    zeta_at(t);
    for (const auto& s : e_set) zeta_at(ad->act_checked(s, t));
  }

  // nu is built per orbit representative over F = the union of all zeta
  // supports, so every vertex the combiner touches has its family ready.
  std::set<VertexId> support;
  for (const auto& [t, m] : zetas)
    for (const auto& [v, w] : m.entries()) support.insert(v);
  std::vector<VertexId> f_set(support.begin(), support.end());
  std::map<VertexId, NuFamily> nus;
  Rational eps_nu = 0;
  for (VertexId v : f_set) {
    VertexId rep = ad->project_v(v);
    if (nus.count(rep)) continue;
    auto fam = build_nu(*ad, rep, e_v_set(*ad, e_set, f_set, rep), epsilon, ys);
    eps_nu = std::max(eps_nu, fam.guarantee);
    nus.emplace(rep, std::move(fam));
  }
  auto lookup = [&](VertexId v, int y) -> const GroupMeasure& {
    return nus.at(ad->project_v(v)).per_y[y];
  };

  std::map<std::pair<VertexId, int>, GroupMeasure> mus;
  auto mu_at = [&](VertexId x, int y) -> const GroupMeasure& {
    auto key = std::make_pair(x, y);
    auto it = mus.find(key);
    if (it == mus.end()) it = mus.emplace(key, combine_mu(*ad, zeta_at(x), lookup, y, ys)).first;
    return it->second;
  };

  Rational eps_zeta = 0;
  for (const auto& s : e_set) {
    for (VertexId t : targets) {
      std::vector<std::pair<VertexId, Rational>> moved;
      for (const auto& [v, w] : zeta_at(t).entries())
        moved.emplace_back(ad->act_checked(s, v), w);
      eps_zeta = std::max(eps_zeta, l1_distance(VertexMeasure::from_entries(std::move(moved)),
                                                zeta_at(ad->act_checked(s, t))));
    }
  }

  struct Row {
    std::string s;
    VertexId x;
    int y;
    Rational value;
  };
  std::vector<Row> rows;
  Rational deficiency = 0;
  for (const auto& s : e_set) {
    for (VertexId t : targets) {
      for (int y = 0; y < ys.size; ++y) {
        Rational val = l1_distance(left_translate(grp, s, mu_at(t, y)),
                                   mu_at(ad->act_checked(s, t), ys.apply(grp, s, y)));
        deficiency = std::max(deficiency, val);
        rows.push_back({s.str(), t, y, val});
      }
    }
  }
  Rational bound = eps_zeta + eps_nu;
  bool pass = deficiency <= bound;

  std::ofstream out = open_out(o.out);
  out << "# " << kVersion << "\n";
  out << "# command: amenability\n";
  out << "# graph: " << o.graph << "\n";
  out << "# action: " << o.action << "\n";
  out << "# proxy: " << o.proxy.spec << "\n";
  out << "# origin: " << origin << "\n";
  out << "# vr: " << o.proxy.vr << "\n";
  out << "# e: " << o.e << "\n";
  out << "# n: " << o.n << "\n";
  out << "# y: " << o.y << "\n";
  out << "# targets:";
  for (VertexId t : targets) out << ' ' << t;
  out << "\n";
  out << "# epsilon: " << rational_str(epsilon) << "\n";
  out << "# seed: " << o.seed << "\n";
  out << "s,x,y,value_num,value_den\n";
  for (const auto& r : rows)
    out << r.s << ',' << r.x << ',' << r.y << ',' << boost::multiprecision::numerator(r.value)
        << ',' << boost::multiprecision::denominator(r.value) << "\n";
  out << "# eps_zeta: " << rational_str(eps_zeta) << "\n";
  out << "# eps_nu: " << rational_str(eps_nu) << "\n";
  out << "# deficiency: " << rational_str(deficiency) << "\n";
  out << "# bound: " << rational_str(bound) << "\n";
  out << "# pass: " << (pass ? 1 : 0) << "\n";
  out.flush();
  if (!out) throw InputError("failed writing " + o.out);

  std::cout << "eps_zeta: " << rational_str(eps_zeta) << "\n";
  std::cout << "eps_nu: " << rational_str(eps_nu) << "\n";
  std::cout << "deficiency: " << rational_str(deficiency) << "\n";
  std::cout << "bound (eps_zeta + eps_nu): " << rational_str(bound) << "\n";
  std::cout << (pass ? "deficiency within bound\n" : "deficiency EXCEEDS bound\n");
  return pass ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fineness, shadow measures, and amenable-action experiments on graphs"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  GenOpts gen;
  auto* sub_gen = app.add_subcommand("gen", "Generate a graph family to a file");
  sub_gen->add_option("--family", gen.family,
                      "tree:<deg>,<r> | farey:<q> | cycle:<n> | bass-serre:<p>,<q>,<r>")
      ->required();
  sub_gen->add_option("--out", gen.out, "Graph output path")->required();
  sub_gen->add_option("--action-out", gen.action_out,
                      "Action output path (bass-serre only; default <out>.action)");

  AnalyzeOpts an;
  auto* sub_an = app.add_subcommand("analyze", "Thinness defect and fineness profile report");
  sub_an->add_option("--graph", an.graph, "Graph file")->required();
  sub_an->add_option("--n", an.n, "Circuit length bound for the fineness profile");
  sub_an->add_option("--base", an.base, "Ball center for thinness triangles");
  sub_an->add_option("--radius", an.radius, "Ball radius for thinness (default: whole graph)");
  sub_an->add_option("--cap", an.cap, "Enumeration cap before truncation");
  sub_an->add_flag("--cache-apsp", an.cache_apsp, "Precompute the all-pairs distance table");
  sub_an->add_option("--frontier", an.frontier,
                     "Ambient frontier for interior flags: leaves | none");

  DecayOpts dec;
  auto* sub_dec = app.add_subcommand("decay", "Averaged-measure decay experiment (CSV)");
  sub_dec->add_option("--graph", dec.graph, "Graph file")->required();
  sub_dec->add_option("--proxy", dec.proxy.spec, "ray:<len> | far:<vertex>")->required();
  sub_dec->add_option("--origin", dec.proxy.origin, "Proxy origin (far only)");
  sub_dec->add_option("--vr", dec.proxy.vr, "Validity radius around the proxy anchor");
  sub_dec->add_option("--pairs", dec.pairs, "Comma list of <x>:<x2> vertex pairs")->required();
  sub_dec->add_option("--n-grid", dec.n_grid, "Comma list of averaging depths n")->required();
  sub_dec->add_option("--c", dec.c, "Shadow-size constant C as <num>/<den> (default 1)");
  sub_dec->add_option("--delta", dec.delta, "Hyperbolicity constant delta (default 1)");
  sub_dec->add_option("--out", dec.out, "CSV output path")->required();
  sub_dec->add_option("--jobs", dec.jobs, "Worker threads (default 1)");
  sub_dec->add_option("--seed", dec.seed, "Seed recorded in the CSV header");
  sub_dec->add_flag("--cache-apsp", dec.cache_apsp, "Prewarm distance rows for all pairs");

  AmenabilityOpts am;
  auto* sub_am = app.add_subcommand("amenability", "Combined-measure equivariance experiment");
  sub_am->add_option("--graph", am.graph, "Graph file")->required();
  sub_am->add_option("--action", am.action, "Action file")->required();
  sub_am->add_option("--proxy", am.proxy.spec, "far:<vertex> | ray:<len> (reduced to far)")
      ->required();
  sub_am->add_option("--origin", am.proxy.origin, "Fixed basepoint (far only)");
  sub_am->add_option("--vr", am.proxy.vr, "Validity radius around the basepoint");
  sub_am->add_option("--e", am.e, "Comma list of group elements to test against")->required();
  sub_am->add_option("--n", am.n, "Averaging depth n")->required();
  sub_am->add_option("--y", am.y, "singleton | perm:<letter>=<i,j,...>;...");
  sub_am->add_option("--targets", am.targets, "Comma list of target vertices (default: proxy)");
  sub_am->add_option("--epsilon", am.epsilon, "Folner tail target for nu (default 1/1000)");
  sub_am->add_option("--out", am.out, "CSV output path")->required();
  sub_am->add_option("--seed", am.seed, "Seed recorded in the CSV header");

  try {
    app.parse(argc, argv);
    if (*sub_gen) return cmd_gen(gen);
    if (*sub_an) return cmd_analyze(an);
    if (*sub_dec) return cmd_decay(dec);
    return cmd_amenability(am);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCertification;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
}
