#include "finehyp/action.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace finehyp {

namespace {

Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace

GroupMeasure GroupMeasure::from_entries(std::vector<std::pair<GroupElement, Rational>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Rational mass = 0;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].second <= 0) throw InvariantViolation("group measure weight must be positive");
    if (i > 0 && entries[i].first == entries[i - 1].first)
      throw InvariantViolation("duplicate group element in measure support");
    mass += entries[i].second;
  }
  if (mass != 1) throw InvariantViolation("group measure mass is " + rational_str(mass) + ", expected 1");
  GroupMeasure m;
  m.entries_ = std::move(entries);
  return m;
}

GroupMeasure GroupMeasure::point_mass(GroupElement g) {
  return from_entries({{std::move(g), Rational(1)}});
}

GroupMeasure GroupMeasure::uniform(const std::vector<GroupElement>& support) {
  if (support.empty()) throw InvariantViolation("uniform group measure needs nonempty support");
  Rational w(1, static_cast<int64_t>(support.size()));
  std::vector<std::pair<GroupElement, Rational>> entries;
  entries.reserve(support.size());
  for (const GroupElement& g : support) entries.emplace_back(g, w);
  return from_entries(std::move(entries));
}

Rational GroupMeasure::at(const GroupElement& g) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), g,
                             [](const auto& e, const GroupElement& k) { return e.first < k; });
  if (it != entries_.end() && it->first == g) return it->second;
  return 0;
}

std::string GroupMeasure::str() const {
  std::string out;
  for (const auto& [g, w] : entries_) {
    if (!out.empty()) out += ' ';
    out += g.str();
    out += ':';
    out += rational_str(w);
  }
  return out;
}

Rational l1_distance(const GroupMeasure& a, const GroupMeasure& b) {
  Rational total = 0;
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  size_t i = 0, j = 0;
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
      total += ea[i].second;
      ++i;
    } else if (i == ea.size() || eb[j].first < ea[i].first) {
      total += eb[j].second;
      ++j;
    } else {
      total += rat_abs(ea[i].second - eb[j].second);
      ++i;
      ++j;
    }
  }
  return total;
}

GroupMeasure left_translate(const FreeProduct& g, const GroupElement& s, const GroupMeasure& m) {
  std::vector<std::pair<GroupElement, Rational>> entries;
  entries.reserve(m.entries().size());
  for (const auto& [t, w] : m.entries()) entries.emplace_back(g.multiply(s, t), w);
  return GroupMeasure::from_entries(std::move(entries));
}

void YSpace::validate(const FreeProduct& g) const {
  if (size < 1) throw InputError("y space must be nonempty");
  for (const auto& [letter, perm] : gen_perms) {
    int ord = g.order(letter);
    if (perm.size() != static_cast<size_t>(size))
      throw InputError("y permutation size mismatch for generator " + std::string(1, letter));
    std::vector<char> seen(size, 0);
    for (int img : perm) {
      if (img < 0 || img >= size || seen[img])
        throw InputError("y table for generator " + std::string(1, letter) + " is not a permutation");
      seen[img] = 1;
    }
    for (int start = 0; start < size; ++start) {
      int cur = start;
      for (int i = 0; i < ord; ++i) cur = perm[cur];
      if (cur != start)
        throw InputError("y permutation for generator " + std::string(1, letter) +
                         " does not satisfy the generator relation");
    }
  }
}

int YSpace::apply(const FreeProduct&, const GroupElement& s, int y) const {
  if (y < 0 || y >= size) throw InputError("y point out of range");
  if (gen_perms.empty()) return y;
  const auto& syls = s.syllables();
  int cur = y;
  for (auto it = syls.rbegin(); it != syls.rend(); ++it) {
    auto mit = gen_perms.find(it->letter);
    if (mit == gen_perms.end())
      throw InputError("no y permutation for generator " + std::string(1, it->letter));
    for (int32_t i = 0; i < it->exp; ++i) cur = mit->second[cur];
  }
  return cur;
}

VertexId ActionData::act_checked(const GroupElement& s, VertexId v) const {
  auto img = act(s, v);
  if (!img)
    throw CertificationError("action of " + s.str() + " on vertex " + std::to_string(v) +
                             " leaves the graph truncation");
  return *img;
}

BassSerreAction::BassSerreAction(int p, int q, int radius) : group_(p, q), radius_(radius) {
  if (radius < 1) throw InputError("bass_serre: radius must be at least 1");
  // id 0 is <a>, id 1 is <b>; every later vertex extends its parent's
  // representative by one syllable
  type_ = {0, 1};
  parent_ = {-1, -1};
  step_ = {Syllable{'a', 0}, Syllable{'a', 0}};
  depth_ = {0, 1};
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.emplace_back(0, 1);
  constexpr int64_t kMaxVertices = INT32_MAX;
  for (size_t idx = 0; idx < type_.size(); ++idx) {
    if (depth_[idx] >= radius_) continue;
    char letter = type_[idx] == 0 ? 'a' : 'b';
    int ord = group_.order(letter);
    for (int i = 1; i < ord; ++i) {
      if (static_cast<int64_t>(type_.size()) >= kMaxVertices)
        throw InputError("bass_serre: truncation exceeds vertex id range");
      VertexId child = static_cast<VertexId>(type_.size());
      type_.push_back(type_[idx] == 0 ? 1 : 0);
      parent_.push_back(static_cast<VertexId>(idx));
      step_.push_back(Syllable{letter, i});
      depth_.push_back(depth_[idx] + 1);
      edges.emplace_back(static_cast<VertexId>(idx), child);
    }
  }
  graph_ = Graph::from_edges(static_cast<VertexId>(type_.size()), edges);
  fd_ = {0, 1};
}

GroupElement BassSerreAction::word(VertexId v) const {
  std::vector<Syllable> steps;
  for (VertexId cur = v; parent_[cur] >= 0; cur = parent_[cur]) steps.push_back(step_[cur]);
  GroupElement w;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    w = group_.multiply(w, group_.gen(it->letter, it->exp));
  return w;
}

std::optional<VertexId> BassSerreAction::lookup(const GroupElement& rep, int type) const {
  const auto& syls = rep.syllables();
  int anchor = (syls.size() % 2 == 0) ? type : 1 - type;
  VertexId cur = anchor == 0 ? 0 : 1;
  for (const Syllable& s : syls) {
    char expect = type_[cur] == 0 ? 'a' : 'b';
    if (s.letter != expect) throw InvariantViolation("non-canonical coset representative");
    VertexId next = -1;
    for (const VertexId* it = graph_.neighbors_begin(cur); it != graph_.neighbors_end(cur); ++it) {
      if (parent_[*it] == cur && step_[*it].exp == s.exp) {
        next = *it;
        break;
      }
    }
    if (next < 0) return std::nullopt;
    cur = next;
  }
  if (type_[cur] != type) throw InvariantViolation("coset type mismatch after descent");
  return cur;
}

std::optional<VertexId> BassSerreAction::act(const GroupElement& s, VertexId v) const {
  if (v < 0 || v >= graph_.size()) throw InputError("act: vertex out of range");
  GroupElement rep = group_.multiply(s, word(v));
  char sub = type_[v] == 0 ? 'a' : 'b';
  if (!rep.syllables().empty() && rep.syllables().back().letter == sub) {
    const Syllable& last = rep.syllables().back();
    rep = group_.multiply(rep, group_.gen(last.letter, -static_cast<int64_t>(last.exp)));
  }
  return lookup(rep, type_[v]);
}

VertexId BassSerreAction::project_v(VertexId a) const {
  if (a < 0 || a >= graph_.size()) throw InputError("project_v: vertex out of range");
  return type_[a] == 0 ? 0 : 1;
}

GroupElement BassSerreAction::sigma(VertexId a) const {
  if (a < 0 || a >= graph_.size()) throw InputError("sigma: vertex out of range");
  return word(a);
}

int BassSerreAction::type(VertexId v) const {
  if (v < 0 || v >= graph_.size()) throw InputError("type: vertex out of range");
  return type_[v];
}

TabulatedAction::TabulatedAction(const Graph& g, FreeProduct group, std::vector<VertexId> fd,
                                 std::vector<VertexId> project, std::vector<GroupElement> sigma,
                                 std::map<char, std::vector<VertexId>> letter_maps)
    : g_(g),
      group_(std::move(group)),
      fd_(std::move(fd)),
      project_(std::move(project)),
      sigma_(std::move(sigma)),
      letter_maps_(std::move(letter_maps)) {
  size_t n = static_cast<size_t>(g_.size());
  if (fd_.empty()) throw InputError("action: empty fundamental domain");
  if (project_.size() != n || sigma_.size() != n)
    throw InputError("action: table sizes do not match the graph");
  for (const auto& [letter, m] : letter_maps_) {
    (void)letter;
    if (m.size() != n) throw InputError("action: generator table size does not match the graph");
  }
}

std::optional<VertexId> TabulatedAction::act(const GroupElement& s, VertexId v) const {
  if (v < 0 || v >= g_.size()) throw InputError("act: vertex out of range");
  VertexId cur = v;
  const auto& syls = s.syllables();
  for (auto it = syls.rbegin(); it != syls.rend(); ++it) {
    auto mit = letter_maps_.find(it->letter);
    if (mit == letter_maps_.end())
      throw InputError("act: no table for generator " + std::string(1, it->letter));
    for (int32_t i = 0; i < it->exp; ++i) {
      cur = mit->second[cur];
      if (cur < 0) return std::nullopt;
    }
  }
  return cur;
}

VertexId TabulatedAction::project_v(VertexId a) const {
  if (a < 0 || a >= g_.size()) throw InputError("project_v: vertex out of range");
  return project_[a];
}

GroupElement TabulatedAction::sigma(VertexId a) const {
  if (a < 0 || a >= g_.size()) throw InputError("sigma: vertex out of range");
  return sigma_[a];
}

namespace {

[[noreturn]] void afail(const std::string& src, int line, const std::string& msg) {
  throw InputError(src + ":" + std::to_string(line) + ": " + msg);
}

[[noreturn]] void vfail(const std::string& src, const std::string& msg) {
  throw InputError(src + ": " + msg);
}

}  // namespace

std::unique_ptr<TabulatedAction> load_action(std::istream& in, const Graph& g,
                                             const std::string& source_name) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty() || line[0] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_line() || line != "finehyp-action v1")
    afail(source_name, lineno, "expected header 'finehyp-action v1'");
  if (!next_line()) afail(source_name, lineno, "missing group line");
  int p = 0, q = 0;
  {
    std::istringstream ls(line);
    std::string kw, kind;
    ls >> kw >> kind >> p >> q;
    if (!ls || kw != "group" || kind != "zmod-free-product" || p < 2 || q < 2)
      afail(source_name, lineno, "expected 'group zmod-free-product <p> <q>' with p, q >= 2");
  }
  FreeProduct group(p, q);
  for (char expect : {'a', 'b'}) {
    if (!next_line()) afail(source_name, lineno, "missing gen line");
    std::istringstream ls(line);
    std::string kw, letter;
    int ord = 0;
    ls >> kw >> letter >> ord;
    if (!ls || kw != "gen" || letter != std::string(1, expect) || ord != group.order(expect))
      afail(source_name, lineno, "expected 'gen " + std::string(1, expect) + " <order>'");
  }

  size_t n = static_cast<size_t>(g.size());
  std::vector<VertexId> fd;
  std::vector<VertexId> project(n, -1);
  std::vector<GroupElement> sigma(n);
  std::vector<char> sigma_set(n, 0);
  std::map<char, std::vector<VertexId>> maps;
  maps['a'].assign(n, -1);
  maps['b'].assign(n, -1);
  bool fd_seen = false;

  auto read_vertex = [&](std::istringstream& ls, const char* what) -> VertexId {
    int64_t v = -1;
    if (!(ls >> v) || v < 0 || v >= g.size())
      afail(source_name, lineno, std::string(what) + " vertex out of range");
    return static_cast<VertexId>(v);
  };

  while (next_line()) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "fd") {
      if (fd_seen) afail(source_name, lineno, "duplicate fd line");
      fd_seen = true;
      int64_t v;
      while (ls >> v) {
        if (v < 0 || v >= g.size()) afail(source_name, lineno, "fd vertex out of range");
        fd.push_back(static_cast<VertexId>(v));
      }
      if (fd.empty()) afail(source_name, lineno, "empty fundamental domain");
      std::vector<VertexId> sorted = fd;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        afail(source_name, lineno, "repeated fd vertex");
    } else if (tag == "orbit") {
      VertexId v = read_vertex(ls, "orbit");
      VertexId f = read_vertex(ls, "orbit");
      if (project[v] >= 0) afail(source_name, lineno, "duplicate orbit line for vertex");
      project[v] = f;
    } else if (tag == "sigma") {
      VertexId v = read_vertex(ls, "sigma");
      std::string w;
      if (!(ls >> w)) afail(source_name, lineno, "missing sigma word");
      if (sigma_set[v]) afail(source_name, lineno, "duplicate sigma line for vertex");
      sigma[v] = group.parse(w);
      sigma_set[v] = 1;
    } else if (tag == "act") {
      std::string letter;
      ls >> letter;
      if (letter != "a" && letter != "b") afail(source_name, lineno, "act generator must be a or b");
      VertexId v = read_vertex(ls, "act");
      VertexId img = read_vertex(ls, "act");
      std::vector<VertexId>& m = maps[letter[0]];
      if (m[v] >= 0) afail(source_name, lineno, "duplicate act line");
      m[v] = img;
    } else {
      afail(source_name, lineno, "unknown directive '" + tag + "'");
    }
  }

  if (!fd_seen) vfail(source_name, "missing fd line");
  for (size_t v = 0; v < n; ++v) {
    if (project[v] < 0) vfail(source_name, "orbit table misses vertex " + std::to_string(v));
    if (!sigma_set[v]) vfail(source_name, "sigma table misses vertex " + std::to_string(v));
  }

  std::vector<char> in_fd(n, 0);
  for (VertexId f : fd) in_fd[f] = 1;
  for (VertexId f : fd)
    if (project[f] != f)
      vfail(source_name, "fd vertex " + std::to_string(f) + " is not its own orbit representative");
  for (size_t v = 0; v < n; ++v)
    if (!in_fd[project[v]])
      vfail(source_name,
            "orbit representative of vertex " + std::to_string(v) + " is outside the fd");

  // invariant 1: generators act by partial automorphisms
  for (const auto& [letter, m] : maps) {
    std::vector<char> hit(n, 0);
    for (size_t v = 0; v < n; ++v) {
      if (m[v] < 0) continue;
      if (hit[m[v]])
        vfail(source_name, "act " + std::string(1, letter) + " is not injective at image " +
                               std::to_string(m[v]));
      hit[m[v]] = 1;
    }
    g.for_each_edge([&](VertexId u, VertexId w) {
      if (m[u] >= 0 && m[w] >= 0 && !g.has_edge(m[u], m[w]))
        vfail(source_name, "act " + std::string(1, letter) + " breaks edge (" + std::to_string(u) +
                               "," + std::to_string(w) + ")");
    });
    // invariant 3: orbits are act-invariant
    for (size_t v = 0; v < n; ++v)
      if (m[v] >= 0 && project[m[v]] != project[v])
        vfail(source_name, "act " + std::string(1, letter) + " moves vertex " + std::to_string(v) +
                               " across orbits");
    // A restriction of a generator of order k decomposes into cycles whose
    // length divides k and open chains shorter than k. Injectivity already
    // holds here, so a chain either terminates or returns to its start.
    int ord = group.order(letter);
    for (size_t v = 0; v < n; ++v) {
      VertexId cur = static_cast<VertexId>(v);
      for (int step = 1; step <= ord; ++step) {
        if (m[cur] < 0) break;
        cur = m[cur];
        if (cur == static_cast<VertexId>(v)) {
          if (ord % step != 0)
            vfail(source_name, "act " + std::string(1, letter) + " has a cycle of length " +
                                   std::to_string(step) + " through vertex " + std::to_string(v) +
                                   ", incompatible with generator order " + std::to_string(ord));
          break;
        }
        if (step == ord)
          vfail(source_name, "act " + std::string(1, letter) + " chain from vertex " +
                                 std::to_string(v) + " fails to close after " +
                                 std::to_string(ord) + " steps");
      }
    }
  }

  auto ad = std::make_unique<TabulatedAction>(g, group, std::move(fd), std::move(project),
                                              std::move(sigma), std::move(maps));

  // invariant 2: a = act(sigma(a), project_v(a)) wherever the chain stays
  // inside the truncation
  for (VertexId v = 0; v < g.size(); ++v) {
    auto img = ad->act(ad->sigma(v), ad->project_v(v));
    if (img && *img != v)
      vfail(source_name, "sigma table inconsistent at vertex " + std::to_string(v));
  }
  return ad;
}

std::unique_ptr<TabulatedAction> load_action_file(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open action file " + path);
  return load_action(in, g, path);
}

void save_action(const ActionData& ad, std::ostream& out) {
  const Graph& g = ad.graph();
  const FreeProduct& grp = ad.group();
  out << "finehyp-action v1\n";
  out << "group zmod-free-product " << grp.p() << " " << grp.q() << "\n";
  out << "gen a " << grp.p() << "\n";
  out << "gen b " << grp.q() << "\n";
  out << "fd";
  for (VertexId f : ad.fundamental_domain()) out << ' ' << f;
  out << "\n";
  for (VertexId v = 0; v < g.size(); ++v) out << "orbit " << v << ' ' << ad.project_v(v) << "\n";
  for (VertexId v = 0; v < g.size(); ++v) out << "sigma " << v << ' ' << ad.sigma(v).str() << "\n";
  for (char letter : {'a', 'b'}) {
    GroupElement s = grp.gen(letter);
    for (VertexId v = 0; v < g.size(); ++v) {
      auto img = ad.act(s, v);
      if (img) out << "act " << letter << ' ' << v << ' ' << *img << "\n";
    }
  }
}

void save_action_file(const ActionData& ad, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path + " for writing");
  save_action(ad, out);
  out.flush();
  if (!out) throw InputError("failed to write " + path);
}

Graph bass_serre_tree(int p, int q, int radius) {
  return BassSerreAction(p, q, radius).take_graph();
}

std::vector<GroupElement> stabilizer(const ActionData& ad, VertexId a, int word_radius) {
  if (a < 0 || a >= ad.graph().size()) throw InputError("stabilizer: vertex out of range");
  if (word_radius < 0) throw InputError("stabilizer: negative word radius");
  std::vector<GroupElement> out;
  for (const GroupElement& w : ad.group().ball(word_radius)) {
    auto img = ad.act(w, a);
    if (img && *img == a) out.push_back(w);
  }
  return out;
}

std::vector<GroupElement> e_v_set(const ActionData& ad, const std::vector<GroupElement>& e,
                                  const std::vector<VertexId>& f, VertexId v) {
  const auto& fd = ad.fundamental_domain();
  if (std::find(fd.begin(), fd.end(), v) == fd.end())
    throw InputError("e_v_set: vertex is not in the fundamental domain");
  const FreeProduct& g = ad.group();
  std::vector<GroupElement> out;
  for (VertexId a : f) {
    if (ad.project_v(a) != v) continue;
    GroupElement sa = ad.sigma(a);
    for (const GroupElement& s : e) {
      VertexId img = ad.act_checked(s, a);
      GroupElement t = g.multiply(g.multiply(g.inverse(ad.sigma(img)), s), sa);
      auto fix = ad.act(t, v);
      if (!fix)
        throw CertificationError("e_v_set: cannot verify " + t.str() +
                                 " inside the truncation");
      if (*fix != v)
        throw InvariantViolation("e_v_set: element " + t.str() + " does not fix vertex " +
                                 std::to_string(v) + "; the section is inconsistent");
      out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

NuFamily build_nu(const ActionData& ad, VertexId v, const std::vector<GroupElement>& ev,
                  const Rational& epsilon, const YSpace& y) {
  if (epsilon <= 0) throw InputError("build_nu: epsilon must be positive");
  y.validate(ad.group());
  const auto& fd = ad.fundamental_domain();
  if (std::find(fd.begin(), fd.end(), v) == fd.end())
    throw InputError("build_nu: vertex is not in the fundamental domain");
  const FreeProduct& g = ad.group();
  std::vector<GroupElement> stab = stabilizer(ad, v, std::max(g.p(), g.q()));
  std::vector<GroupElement> sorted = stab;
  std::sort(sorted.begin(), sorted.end());
  auto contains = [&](const GroupElement& x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
  };
  // closure certifies the word radius captured a whole finite subgroup
  for (const GroupElement& x : stab)
    for (const GroupElement& w : stab)
      if (!contains(g.multiply(x, w)))
        throw InputError("build_nu: stabilizer of vertex " + std::to_string(v) +
                         " is not finite at the probed word radius");
  for (const GroupElement& e : ev)
    if (!contains(e))
      throw InputError("build_nu: element " + e.str() + " is outside the stabilizer of vertex " +
                       std::to_string(v));
  NuFamily fam;
  fam.guarantee = 0;
  fam.per_y.assign(static_cast<size_t>(y.size), GroupMeasure::uniform(stab));
  return fam;
}

NuFamily build_nu_folner(const FreeProduct& g, const GroupElement& t,
                         const std::vector<GroupElement>& ev, const Rational& epsilon,
                         const YSpace& y) {
  if (epsilon <= 0) throw InputError("build_nu_folner: epsilon must be positive");
  y.validate(g);
  if (t.is_identity()) throw InputError("build_nu_folner: generator is the identity");
  constexpr int64_t kMaxPower = 4096;
  int64_t maxabs = 0;
  for (const GroupElement& e : ev) {
    if (e.is_identity()) continue;
    int64_t found = 0;
    GroupElement tp = t;
    GroupElement tn = g.inverse(t);
    for (int64_t i = 1; i <= kMaxPower && found == 0; ++i) {
      if (tp.is_identity()) throw InputError("build_nu_folner: generator has finite order");
      if (tp == e) {
        found = i;
      } else if (tn == e) {
        found = -i;
      } else {
        tp = g.multiply(tp, t);
        tn = g.multiply(tn, g.inverse(t));
      }
    }
    if (found == 0)
      throw InputError("build_nu_folner: " + e.str() + " is not a small power of " + t.str());
    maxabs = std::max(maxabs, std::abs(found));
  }
  int64_t len = 1;
  if (maxabs > 0) {
    Rational need = Rational(2 * maxabs) / epsilon;
    auto num = boost::multiprecision::numerator(need);
    auto den = boost::multiprecision::denominator(need);
    auto lc = (num + den - 1) / den;
    if (lc > 20001) throw InputError("build_nu_folner: interval too large; relax epsilon");
    len = lc.template convert_to<int64_t>();
    if (len < 1) len = 1;
    if (len % 2 == 0) ++len;
  }
  int64_t half = (len - 1) / 2;
  std::vector<GroupElement> support;
  support.reserve(static_cast<size_t>(len));
  support.push_back(g.identity());
  GroupElement pos = g.identity();
  GroupElement neg = g.identity();
  GroupElement tinv = g.inverse(t);
  for (int64_t i = 1; i <= half; ++i) {
    pos = g.multiply(pos, t);
    neg = g.multiply(neg, tinv);
    if (pos.is_identity()) throw InputError("build_nu_folner: generator has finite order");
    support.push_back(pos);
    support.push_back(neg);
  }
  std::sort(support.begin(), support.end());
  if (std::adjacent_find(support.begin(), support.end()) != support.end())
    throw InputError("build_nu_folner: generator has finite order");
  NuFamily fam;
  fam.guarantee = maxabs == 0 ? Rational(0) : Rational(2 * maxabs, len);
  if (fam.guarantee > epsilon) throw InvariantViolation("build_nu_folner: guarantee exceeds epsilon");
  fam.per_y.assign(static_cast<size_t>(y.size), GroupMeasure::uniform(support));
  return fam;
}

GroupMeasure combine_mu(const ActionData& ad, const VertexMeasure& zeta_x,
                        const std::function<const GroupMeasure&(VertexId, int)>& nu_lookup,
                        int y, const YSpace& yspace) {
  const FreeProduct& g = ad.group();
  std::map<GroupElement, Rational> acc;
  for (const auto& [a, w] : zeta_x.entries()) {
    GroupElement sa = ad.sigma(a);
    VertexId va = ad.project_v(a);
    int y2 = yspace.apply(g, g.inverse(sa), y);
    const GroupMeasure& nu = nu_lookup(va, y2);
    for (const auto& [t, u] : nu.entries()) acc[g.multiply(sa, t)] += w * u;
  }
  std::vector<std::pair<GroupElement, Rational>> entries(acc.begin(), acc.end());
  return GroupMeasure::from_entries(std::move(entries));
}

Rational equivariance_deficiency(const FreeProduct& g, const std::vector<GroupElement>& e,
                                 const std::vector<std::pair<int, int>>& samples,
                                 const std::function<GroupMeasure(int, int)>& mu,
                                 const std::function<int(const GroupElement&, int)>& translate_x,
                                 const YSpace& yspace) {
  Rational best = 0;
  for (const GroupElement& s : e) {
    for (const auto& [x, y] : samples) {
      GroupMeasure lhs = left_translate(g, s, mu(x, y));
      GroupMeasure rhs = mu(translate_x(s, x), yspace.apply(g, s, y));
      Rational d = l1_distance(lhs, rhs);
      if (d > best) best = d;
    }
  }
  return best;
}

}  // namespace finehyp
